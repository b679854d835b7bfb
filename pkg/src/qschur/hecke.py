"""Cyclotomic Hecke algebras in Ariki-Koike normal form and the DJM side.

An element is a dict {(c, w): coeff} standing for sum coeff X^c H_w, where
c is an exponent vector and w a permutation (0-based image tuple).  In a
cyclotomic context (level ell) every c_i lies in [0, ell); the affine
context (ell=None) keeps arbitrary Laurent exponents and serves as the
reference for the commutation rules.

Relations used:  (H_i - q^{-1})(H_i + q) = 0,  H_i X_i H_i = X_{i+1},
X_j commute, and prod_i (X_1 - u_i) = 0 in the cyclotomic quotient.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .combinat import (
    MultiComposition,
    MultiTableau,
    d_word,
    enumerate_objects,
    enumerate_sst,
    multipartitions,
    perm_inverse,
    perm_length,
    reduced_word,
    sst_inverse_image,
    young_subgroup,
)
from .linalg import PRIME, InconsistentSystem, SingularSystem, random_point, rank_mod_p, solve_square, specialize
from .ring import ONE, ZERO, IntLaurent, MultiLaurent, RatFunc, q_pow, scalar

QQ = IntLaurent.q(1)
QI = IntLaurent.q(-1)
QD = QQ - QI  # q - q^{-1}


class HeckeError(ValueError):
    pass


def _norm(x):
    """Keep scalars Laurent whenever possible."""
    if isinstance(x, RatFunc):
        if x.den.is_unit():
            (k, s), = x.den.items()
            return x.num.shift(-k) * s
    return x


def _add(d: dict, key, v):
    s = d.get(key)
    s = v if s is None else s + v
    if s:
        d[key] = s
    else:
        d.pop(key, None)


def _scale(d: dict, c) -> dict:
    if not c:
        return {}
    out = {}
    for k, v in d.items():
        x = _norm(v * c)
        if x:
            out[k] = x
    return out


def _accumulate(out: dict, d: dict, c=None):
    for k, v in d.items():
        _add(out, k, v if c is None else _norm(v * c))


@lru_cache(maxsize=None)
def _word(w: tuple) -> tuple:
    return reduced_word(w)


def _identity(m: int) -> tuple:
    return tuple(range(m))


# ---------------------------------------------------------------------------


class AKContext:
    """H_{m,u}: level ell (None for the affine algebra), rank m, parameters u."""

    def __init__(self, m: int, us: Sequence = (), affine: bool = False):
        self.m = m
        self.affine = affine
        self.us = tuple(_norm(scalar(u)) if not isinstance(u, (IntLaurent, RatFunc)) else _norm(u) for u in us)
        self.ell = None if affine else len(self.us)
        if not affine and self.ell < 1:
            raise HeckeError("a cyclotomic context needs at least one parameter")
        if not affine:
            # P(X) = prod (X - u_i) = sum p_j X^j
            p = [ONE]
            for u in self.us:
                nxt = [ZERO] * (len(p) + 1)
                for j, c in enumerate(p):
                    nxt[j + 1] = nxt[j + 1] + c
                    nxt[j] = _norm(nxt[j] - c * u)
                p = nxt
            self.p = p
            if not self.p[0]:
                raise HeckeError("parameters must be nonzero")
        self._red: dict = {}
        self._N: dict = {}
        self._xinv: dict = {}

    @property
    def dimension(self) -> int:
        if self.affine:
            raise HeckeError("the affine Hecke algebra is infinite dimensional")
        from math import factorial

        return self.ell**self.m * factorial(self.m)

    def symbols(self) -> list:
        """All normal-form symbols (c, w) in a fixed order."""
        if self.affine:
            raise HeckeError("no finite symbol set for the affine algebra")
        out = []
        for w in itertools.permutations(range(self.m)):
            for c in itertools.product(range(self.ell), repeat=self.m):
                out.append((c, tuple(w)))
        out.sort(key=lambda s: (perm_length(s[1]), s[1], s[0]))
        return out

    # elements ---------------------------------------------------------------
    def one(self) -> "AKElement":
        return AKElement(self, {((0,) * self.m, _identity(self.m)): ONE})

    def zero(self) -> "AKElement":
        return AKElement(self, {})

    def H(self, i: int) -> "AKElement":
        return AKElement(self, self._lmul_h(i, self.one().terms))

    def Hw(self, w: Sequence[int]) -> "AKElement":
        return AKElement(self, {((0,) * self.m, tuple(w)): ONE})

    def X(self, j: int, power: int = 1) -> "AKElement":
        t = self.one().terms
        for _ in range(abs(power)):
            t = self._lmul_x(j, t) if power > 0 else self._lmul_xinv(j, t)
        return AKElement(self, t)

    def scalar(self, c) -> "AKElement":
        return AKElement(self, _scale(self.one().terms, scalar(c)))

    def word(self, letters: Iterable) -> "AKElement":
        """Product of letters ('H', i), ('Hinv', i), ('X', j, power)."""
        t = self.one().terms
        for letter in reversed(list(letters)):
            t = self._apply_letter(letter, t)
        return AKElement(self, t)

    def _apply_letter(self, letter, t):
        kind = letter[0]
        if kind == "H":
            return self._lmul_h(letter[1], t)
        if kind == "Hinv":
            return self._lmul_hinv(letter[1], t)
        if kind == "X":
            p = letter[2] if len(letter) > 2 else 1
            for _ in range(abs(p)):
                t = self._lmul_x(letter[1], t) if p > 0 else self._lmul_xinv(letter[1], t)
            return t
        raise HeckeError(f"unknown letter {letter!r}")

    # finite Hecke part ------------------------------------------------------
    @staticmethod
    def _hw_rmul(w: tuple, i: int):
        """H_w H_i as [(coeff, w')]."""
        a = i - 1
        ws = list(w)
        ws[a], ws[a + 1] = ws[a + 1], ws[a]
        ws = tuple(ws)
        if w[a] < w[a + 1]:
            return ((ONE, ws),)
        return ((-QD, w), (ONE, ws))

    @staticmethod
    def _hw_lmul(i: int, w: tuple):
        """H_i H_w as [(coeff, w')]."""
        a, b = i - 1, i
        sw = tuple(b if x == a else a if x == b else x for x in w)
        if w.index(a) < w.index(b):
            return ((ONE, sw),)
        return ((-QD, w), (ONE, sw))

    def _rmul_h(self, t: dict, i: int) -> dict:
        out: dict = {}
        for (c, w), v in t.items():
            for coef, w2 in self._hw_rmul(w, i):
                _add(out, (c, w2), v if coef == ONE else _norm(v * coef))
        return out

    def _rmul_perm(self, t: dict, w: tuple) -> dict:
        for i in _word(w):
            t = self._rmul_h(t, i)
        return t

    # left multiplications -----------------------------------------------------
    def _lmul_h(self, i: int, t: dict) -> dict:
        """H_i . t using H_i X^c = X^{s_i c} H_i + (q - q^-1)(divided difference terms)."""
        if not 1 <= i < self.m:
            raise HeckeError(f"H_{i} out of range for m={self.m}")
        out: dict = {}
        a0 = i - 1
        for (c, w), v in t.items():
            a, b = c[a0], c[a0 + 1]
            cs = list(c)
            cs[a0], cs[a0 + 1] = b, a
            cs = tuple(cs)
            for coef, w2 in self._hw_lmul(i, w):
                _add(out, (cs, w2), v if coef == ONE else _norm(v * coef))
            if a == b:
                continue
            if a > b:
                pairs, sign = [(a - 1 - s, b + 1 + s) for s in range(a - b)], 1
            else:
                pairs, sign = [(b - 1 - s, a + 1 + s) for s in range(b - a)], -1
            cv = _norm(v * QD) if sign > 0 else _norm(-(v * QD))
            for x, y in pairs:
                d = list(c)
                d[a0], d[a0 + 1] = x, y
                _add(out, (tuple(d), w), cv)
        return out

    def _lmul_hinv(self, i: int, t: dict) -> dict:
        out = self._lmul_h(i, t)
        _accumulate(out, t, QD)
        return out

    def _lmul_x(self, j: int, t: dict) -> dict:
        if not 1 <= j <= self.m:
            raise HeckeError(f"X_{j} out of range for m={self.m}")
        out: dict = {}
        a = j - 1
        for (c, w), v in t.items():
            c2 = c[:a] + (c[a] + 1,) + c[a + 1 :]
            if self.affine or c2[a] < self.ell:
                _add(out, (c2, w), v)
            else:
                _accumulate(out, self._rmul_perm(self.reduce_monomial(c2), w), v)
        return out

    def _lmul_xinv(self, j: int, t: dict) -> dict:
        if self.affine:
            out = {}
            a = j - 1
            for (c, w), v in t.items():
                out[(c[:a] + (c[a] - 1,) + c[a + 1 :], w)] = v
            return out
        return self._mul(self.x_inverse(j), t)

    # cyclotomic reduction -----------------------------------------------------
    def _power_form(self, k: int) -> dict:
        """Normal form of X_k^ell."""
        if k in self._N:
            return self._N[k]
        ell, m = self.ell, self.m
        e = _identity(m)
        if k == 1:
            out = {}
            for j in range(ell):
                if self.p[j]:
                    c = (j,) + (0,) * (m - 1)
                    out[(c, e)] = _norm(-self.p[j])
        else:
            prev = self._power_form(k - 1)
            out = self._rmul_h(self._lmul_h(k - 1, prev), k - 1)
            s = tuple(k - 2 if x == k - 1 else k - 1 if x == k - 2 else x for x in e)
            for j in range(1, ell):
                c = [0] * m
                c[k - 2], c[k - 1] = ell - j, j
                _add(out, (tuple(c), s), -QD)
        self._N[k] = out
        return out

    def reduce_monomial(self, c: tuple) -> dict:
        """Normal form of X^c for a nonnegative exponent vector c."""
        c = tuple(c)
        if c in self._red:
            return self._red[c]
        ell, m = self.ell, self.m
        big = [k for k in range(m) if c[k] >= ell]
        if any(x < 0 for x in c):
            raise HeckeError("reduce_monomial expects nonnegative exponents")
        if not big:
            res = {(c, _identity(m)): ONE}
        else:
            k = big[-1]
            base = list(c)
            base[k] -= ell
            res = {}
            for (d, v), coef in self._power_form(k + 1).items():
                c2 = tuple(x + y for x, y in zip(base, d))
                _accumulate(res, self._rmul_perm(self.reduce_monomial(c2), v), coef)
        self._red[c] = res
        return res

    def x_inverse(self, j: int) -> dict:
        if j in self._xinv:
            return self._xinv[j]
        m = self.m
        e = _identity(m)
        if j == 1:
            inv_p0 = _norm(RatFunc(ONE) / RatFunc(self.p[0])) if not (isinstance(self.p[0], IntLaurent) and self.p[0].is_unit()) else _unit_inverse(self.p[0])
            out = {}
            for k in range(1, len(self.p)):
                if self.p[k]:
                    c = (k - 1,) + (0,) * (m - 1)
                    _add(out, (c, e), _norm(-(self.p[k] * inv_p0)))
        else:
            out = self._lmul_hinv(j - 1, self._mul(self.x_inverse(j - 1), self._rmul_hinv(self.one().terms, j - 1)))
        self._xinv[j] = out
        return out

    def _rmul_hinv(self, t: dict, i: int) -> dict:
        out = self._rmul_h(t, i)
        _accumulate(out, t, QD)
        return out

    # products -----------------------------------------------------------------
    def _mul(self, A: dict, B: dict) -> dict:
        out: dict = {}
        for (c, w), v in A.items():
            t = B
            for i in reversed(_word(w)):
                t = self._lmul_h(i, t)
            for j, e in enumerate(c, start=1):
                for _ in range(abs(e)):
                    t = self._lmul_x(j, t) if e > 0 else self._lmul_xinv(j, t)
            _accumulate(out, t, v)
        return out

    def reduce(self, other: "AKElement") -> "AKElement":
        """Image of an affine element (nonnegative exponents) in this quotient."""
        out: dict = {}
        for (c, w), v in other.terms.items():
            if any(x < 0 for x in c):
                t = self.one().terms
                for j, e in enumerate(c, start=1):
                    for _ in range(abs(e)):
                        t = self._lmul_x(j, t) if e > 0 else self._lmul_xinv(j, t)
                _accumulate(out, self._rmul_perm(t, w), v)
            else:
                _accumulate(out, self._rmul_perm(self.reduce_monomial(c), w), v)
        return AKElement(self, out)


def _unit_inverse(x: IntLaurent) -> IntLaurent:
    (k, s), = x.items()
    return IntLaurent.q(-k) * s


@dataclass
class AKElement:
    ctx: AKContext
    terms: dict

    def __add__(self, other):
        out = dict(self.terms)
        _accumulate(out, other.terms)
        return AKElement(self.ctx, out)

    def __neg__(self):
        return AKElement(self.ctx, _scale(self.terms, IntLaurent.const(-1)))

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, AKElement):
            return AKElement(self.ctx, self.ctx._mul(self.terms, other.terms))
        return AKElement(self.ctx, _scale(self.terms, scalar(other)))

    def __rmul__(self, other):
        return AKElement(self.ctx, _scale(self.terms, scalar(other)))

    def __eq__(self, other):
        if not isinstance(other, AKElement):
            return NotImplemented
        return (self - other).is_zero()

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def star(self) -> "AKElement":
        """The anti-involution fixing H_i and X_j."""
        ctx = self.ctx
        out: dict = {}
        for (c, w), v in self.terms.items():
            t = ctx.one().terms
            # (X^c H_w)* = H_{w^-1} X^c
            for j, e in enumerate(c, start=1):
                for _ in range(abs(e)):
                    t = ctx._lmul_x(j, t) if e > 0 else ctx._lmul_xinv(j, t)
            for i in _word(w):
                t = ctx._lmul_h(i, t)
            _accumulate(out, t, v)
        return AKElement(ctx, out)

    def act(self, f: MultiLaurent) -> MultiLaurent:
        """Action on Laurent polynomials (affine elements with Laurent coefficients)."""
        from .polyrep import hecke_action

        out = MultiLaurent(f.m)
        for (c, w), v in self.terms.items():
            g = hecke_action(f, _word(w)).mul_monomial(c)
            out = out + g.scale(v)
        return out

    def vector(self, index: dict) -> dict:
        return {index[k]: v for k, v in self.terms.items()}

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (c, w), v in sorted(self.terms.items(), key=lambda kv: (perm_length(kv[0][1]), kv[0][1], kv[0][0])):
            mono = "*".join(f"X{j + 1}" + (f"^{e}" if e != 1 else "") for j, e in enumerate(c) if e)
            hw = "H[" + "".join(map(str, _word(w))) + "]" if _word(w) else ""
            sym = "*".join(x for x in (mono, hw) if x) or "1"
            parts.append(f"({v})*{sym}")
        return " + ".join(parts)

    __repr__ = __str__


def straighten(ctx: AKContext, letters: Iterable) -> AKElement:
    """Normal form of a word in ('H', i), ('Hinv', i), ('X', j[, power])."""
    return ctx.word(letters)


# ---------------------------------------------------------------------------
# DJM elements


def _check_object(lam: MultiComposition, ctx: AKContext):
    if not isinstance(lam, MultiComposition) or not lam.is_cyclotomic():
        raise HeckeError(f"{lam} is not a cyclotomic multicomposition")
    if lam.level != ctx.ell or lam.weight != ctx.m:
        raise HeckeError(f"{lam} does not match level {ctx.ell} and rank {ctx.m}")


def x_lambda(ctx: AKContext, lam: MultiComposition) -> AKElement:
    """X_lam = sum over the Young subgroup of q^{-l(w)} H_w."""
    out = {}
    zero = (0,) * ctx.m
    for w in young_subgroup(lam.flat):
        out[(zero, tuple(w))] = q_pow(-perm_length(w))
    return AKElement(ctx, out)


def pi_lambda(ctx: AKContext, lam: MultiComposition) -> AKElement:
    """prod_{i=1}^{ell-1} prod_{j <= a_i} (X_j - u_{i+1}), a_i = |lam^(1)| + ... + |lam^(i)|."""
    el = ctx.one()
    a = 0
    for i in range(1, ctx.ell):
        a += sum(lam.components[i])
        u = ctx.us[i]
        for j in range(1, a + 1):
            el = (ctx.X(j) - ctx.scalar(u)) * el
    return el


def m_lambda(ctx: AKContext, lam: MultiComposition, balanced: bool = False) -> AKElement:
    """m_lam = pi_lam X_lam; balanced=True scales by q^{l(w_lam)} (longest element of S_lam)."""
    _check_object(lam, ctx)
    pi, xl = pi_lambda(ctx, lam), x_lambda(ctx, lam)
    m1 = pi * xl
    if m1 != xl * pi:
        raise HeckeError("pi_lambda and X_lambda fail to commute")
    if balanced:
        m1 = m1 * q_pow(longest_length(lam.flat))
    return m1


def longest_length(comp: Sequence[int]) -> int:
    return sum(a * (a - 1) // 2 for a in comp)


def _left_word(ctx: AKContext, word: Sequence[int], el: AKElement) -> AKElement:
    t = el.terms
    for i in reversed(tuple(word)):
        t = ctx._lmul_h(i, t)
    return AKElement(ctx, t)


def _right_word(ctx: AKContext, el: AKElement, word: Sequence[int]) -> AKElement:
    t = el.terms
    for i in word:
        t = ctx._rmul_h(t, i)
    return AKElement(ctx, t)


def m_st(ctx: AKContext, S: MultiTableau, T: MultiTableau, mu: MultiComposition, nu: MultiComposition, balanced: bool = False) -> AKElement:
    """m_{ST} = sum_{s in mu^-1(S), t in nu^-1(T)} q^{-l(d(s))-l(d(t))} H_{d(s)}^* m_lam H_{d(t)}.

    balanced=True uses m'_lam and the symmetric weights q^{k(S)-l(d(s))},
    q^{k(T)-l(d(t))}, with k the largest length occurring in the fibre.
    """
    lam = S.shape
    if T.shape != lam:
        raise HeckeError("S and T have different shapes")
    base = m_lambda(ctx, lam, balanced=balanced)
    # T_i = q^{-1} H_i is the DJM generator for X_lam = sum T_w, hence the weights
    words_t = [d_word(t) for t in sst_inverse_image(T, nu)]
    words_s = [d_word(s) for s in sst_inverse_image(S, mu)]
    top_t = max(map(len, words_t)) if balanced else 0
    top_s = max(map(len, words_s)) if balanced else 0
    right = ctx.zero()
    for dw in words_t:
        right = right + _right_word(ctx, base, dw) * q_pow(top_t - len(dw))
    out = ctx.zero()
    for dw in words_s:
        # H_{d(s)}^* = H_{d(s)^{-1}}: the reduced word read backwards
        out = out + _left_word(ctx, tuple(reversed(dw)), right) * q_pow(top_s - len(dw))
    return out


# ---------------------------------------------------------------------------
# modules and homomorphisms


class ModuleSpace:
    """M^mu = m_mu H with row-reduced spanning data."""

    def __init__(self, ctx: AKContext, mu: MultiComposition):
        _check_object(mu, ctx)
        self.ctx, self.mu = ctx, mu
        self.generator = m_lambda(ctx, mu)
        self.symbols = ctx.symbols()
        self.index = {s: k for k, s in enumerate(self.symbols)}
        self._columns = None

    @property
    def columns(self) -> list:
        """m_mu X^c H_w for every symbol, as sparse vectors."""
        if self._columns is None:
            cols = []
            for c, w in self.symbols:
                t = self.ctx._rmul_perm(self.ctx._mul(self.generator.terms, {(c, _identity(self.ctx.m)): ONE}), w)
                cols.append({self.index[k]: v for k, v in t.items()})
            self._columns = cols
        return self._columns

    def rank(self) -> int:
        return vector_rank(self.columns)

    def basis(self) -> list:
        """Independent subset of the spanning columns (lowest symbols first)."""
        r, piv, _ = rank_mod_p(specialize(self.columns, random_point()))
        return [self.symbols[i] for i in piv]

    def preimage(self, y: AKElement) -> AKElement:
        """Some h with m_mu h = y (raises if y is not in M^mu)."""
        cols = self.columns
        rows: dict = {}
        for j, col in enumerate(cols):
            for i, v in col.items():
                rows.setdefault(i, {})[j] = v
        yv = y.vector(self.index)
        sol = solve_any(rows, yv, len(cols))
        out = {}
        for j, v in sol.items():
            _add(out, (self.symbols[j][0], self.symbols[j][1]), v)
        # out is sum v * (X^c H_w) with c, w from the symbol
        h = AKElement(self.ctx, {})
        for (c, w), v in out.items():
            h = h + AKElement(self.ctx, {(c, w): v})
        return h


def vector_rank(vectors: Sequence[dict], tries: int = 3) -> int:
    rows = [dict(v) for v in vectors]
    import random as _r

    rng = _r.Random(7)
    best = 0
    for _ in range(tries):
        try:
            r, _, _ = rank_mod_p(specialize(rows, random_point(rng)))
        except ZeroDivisionError:
            continue
        best = max(best, r)
        if best == len(rows):
            break
    return best


def solve_any(rows: dict, rhs: dict, ncols: int) -> dict:
    """A particular solution of sum_j rows[i][j] x_j = rhs[i]; checked exactly.

    rows maps a row key to a sparse row; returns {j: value}.
    """
    keys = sorted(set(rows) | set(rhs))
    mat = [rows.get(k, {}) for k in keys]
    import random as _r

    rng = _r.Random(11)
    for _ in range(4):
        qv = random_point(rng)
        try:
            spec = specialize(mat, qv)
        except ZeroDivisionError:
            continue
        # pivot columns via the transpose
        cols: dict = {}
        for i, r in enumerate(spec):
            for j, v in r.items():
                cols.setdefault(j, {})[i] = v
        col_ids = sorted(cols)
        _, piv_c_idx, _ = rank_mod_p([cols[j] for j in col_ids])
        piv_cols = [col_ids[k] for k in piv_c_idx]
        _, piv_rows, _ = rank_mod_p([{piv_cols.index(j): v for j, v in r.items() if j in piv_cols} for r in spec])
        if len(piv_rows) != len(piv_cols):
            continue
        sub = [{piv_cols.index(j): v for j, v in mat[i].items() if j in piv_cols} for i in piv_rows]
        try:
            vals = solve_square(sub, [rhs.get(keys[i], ZERO) for i in piv_rows], len(piv_cols))
        except SingularSystem:
            continue
        x = {piv_cols[k]: _norm(v) for k, v in enumerate(vals) if v}
        ok = True
        for i, k in enumerate(keys):
            acc = ZERO
            for j, v in mat[i].items():
                if j in x:
                    acc = acc + v * x[j]
            if _norm(acc - rhs.get(k, ZERO)):
                ok = False
                break
        if ok:
            return x
        raise InconsistentSystem("element is not in the module", witness=k)
    raise SingularSystem("could not find a pivot structure")


@dataclass
class HomMap:
    """Hom(M^source, M^target): m_source h -> image h."""

    ctx: AKContext
    source: MultiComposition
    target: MultiComposition
    image: AKElement

    def __eq__(self, other):
        return (self.source, self.target) == (other.source, other.target) and self.image == other.image

    def is_zero(self) -> bool:
        return self.image.is_zero()


def module_space(ctx: AKContext, mu: MultiComposition) -> ModuleSpace:
    cache = ctx.__dict__.setdefault("_modules", {})
    if mu not in cache:
        cache[mu] = ModuleSpace(ctx, mu)
    return cache[mu]


def module_basis(ctx: AKContext, mu: MultiComposition) -> tuple[list, int]:
    M = module_space(ctx, mu)
    b = M.basis()
    return b, len(b)


def identity_hom(ctx: AKContext, mu: MultiComposition) -> HomMap:
    return HomMap(ctx, mu, mu, m_lambda(ctx, mu))


def compose_hom(f: HomMap, g: HomMap) -> HomMap:
    """f o g."""
    if g.target != f.source:
        raise HeckeError(f"boundary mismatch: {g.target} vs {f.source}")
    if g.is_zero() or f.is_zero():
        return HomMap(f.ctx, g.source, f.target, f.ctx.zero())
    h = module_space(f.ctx, f.source).preimage(g.image)
    return HomMap(f.ctx, g.source, f.target, f.image * h)


def hom_well_defined(ctx: AKContext, source: MultiComposition, image: AKElement) -> bool:
    """image = z m_source for some z, which makes m_source h -> image h well defined."""
    gen = m_lambda(ctx, source)
    syms = ctx.symbols()
    index = {s: k for k, s in enumerate(syms)}
    rows: dict = {}
    for j, (c, w) in enumerate(syms):
        col = (AKElement(ctx, {(c, w): ONE}) * gen).vector(index)
        for i, v in col.items():
            rows.setdefault(i, {})[j] = v
    try:
        solve_any(rows, image.vector(index), len(syms))
        return True
    except InconsistentSystem:
        return False


@dataclass
class CellularElement:
    lam: MultiComposition
    S: MultiTableau  # type mu (target side, left index)
    T: MultiTableau  # type nu (source side, right index)
    hom: HomMap


def cellular_image(ctx: AKContext, S, T, mu, nu, balanced: bool = False) -> AKElement:
    """Image of m_nu under phi_{ST}.

    With balanced=True the basis is built from m'_lam = q^{l(w_lam)} m_lam and
    symmetric fibre weights, so phi'_{ST}(m'_nu) = m'_{ST} and the image of
    m_nu is q^{-l(w_nu)} m'_{ST}.
    """
    el = m_st(ctx, S, T, mu, nu, balanced=balanced)
    if balanced:
        el = el * q_pow(-longest_length(nu.flat))
    return el


def phi_basis(ctx: AKContext, objects: Sequence[MultiComposition] | None = None, balanced: bool = False, check: bool = False) -> list:
    """phi_{ST}: M^nu -> M^mu, m_nu h -> m_{ST} h, over all objects.

    S has type mu (the target) and T type nu (the source).  Every HomMap
    records the image of the plain generator m_nu.
    """
    m = ctx.m
    objs = list(objects) if objects is not None else enumerate_objects(m, ctx.ell, empty_zero=True)
    if m == 0:
        return []
    out = []
    for lam in multipartitions(m, ctx.ell):
        ssts = {mu: enumerate_sst(lam, mu) for mu in objs}
        for mu in objs:
            for S in ssts[mu]:
                for nu in objs:
                    for T in ssts[nu]:
                        el = cellular_image(ctx, S, T, mu, nu, balanced=balanced)
                        if check and not hom_well_defined(ctx, nu, el):
                            raise HeckeError(f"phi_{{{S},{T}}} is not well defined")
                        out.append(CellularElement(lam, S, T, HomMap(ctx, nu, mu, el)))
    return out


def hom_dimensions(ctx: AKContext, objects=None) -> dict:
    """{(nu, mu): dim Hom(M^nu, M^mu)} counted by semistandard pairs."""
    objs = list(dict.fromkeys(objects)) if objects is not None else enumerate_objects(ctx.m, ctx.ell, empty_zero=True)
    dims = {(nu, mu): 0 for nu in objs for mu in objs}
    for lam in multipartitions(ctx.m, ctx.ell):
        cnt = {mu: len(enumerate_sst(lam, mu)) for mu in objs}
        for nu in objs:
            for mu in objs:
                dims[(nu, mu)] += cnt[nu] * cnt[mu]
    return dims


def phi_independence(ctx: AKContext, basis: Sequence[CellularElement]) -> dict:
    """{(nu, mu): (count, rank)} for the images of phi_{ST} in each Hom block."""
    index = {s: k for k, s in enumerate(ctx.symbols())}
    blocks: dict = {}
    for el in basis:
        blocks.setdefault((el.hom.source, el.hom.target), []).append(el.hom.image.vector(index))
    return {k: (len(v), vector_rank(v)) for k, v in blocks.items()}
