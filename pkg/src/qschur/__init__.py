"""Exact computations in affine and cyclotomic q-Schur categories.

Modules: ring (Laurent and rational scalars), combinat (compositions,
tableaux, basis labels), diagram (terms), polyrep (polynomial
representation), hecke (Ariki-Koike algebras and the DJM Schur algebra),
cycschur (the functor to the Schur algebra), cli.
"""

__version__ = "0.1.0"
