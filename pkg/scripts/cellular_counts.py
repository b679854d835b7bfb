"""Cellular basis sizes of the cyclotomic q-Schur algebra against SST counts.

    python scripts/cellular_counts.py --max-m 3 --max-level 2
"""

import argparse
import sys
import time

from qschur import hecke
from qschur.combinat import enumerate_objects, enumerate_sst, multipartitions

PARAMS = ("1", "q", "2")


def sst_total(m: int, ell: int) -> int:
    objs = enumerate_objects(m, ell, empty_zero=True)
    return sum(len(enumerate_sst(lam, mu)) * len(enumerate_sst(lam, nu)) for lam in multipartitions(m, ell) for mu in objs for nu in objs)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--max-level", type=int, default=2)
    args = ap.parse_args(argv)
    print(f"{'ell':>3} {'m':>2} {'cellular':>9} {'sst':>6} {'indep':>6} {'sec':>6}")
    ok = True
    for ell in range(1, args.max_level + 1):
        for m in range(1, args.max_m + 1):
            t0 = time.perf_counter()
            ctx = hecke.AKContext(m, PARAMS[:ell])
            basis = hecke.phi_basis(ctx, check=True)
            indep = all(c == r for c, r in hecke.phi_independence(ctx, basis).values())
            want = sst_total(m, ell)
            ok &= indep and len(basis) == want
            print(f"{ell:3d} {m:2d} {len(basis):9d} {want:6d} {str(indep):>6} {time.perf_counter() - t0:6.1f}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
