"""Compare G on the double SST basis with the cellular basis, block by block.

    python scripts/g_check.py --max-m 3 --max-level 2

Also prints the structure-constant agreement for m = 2.
"""

import argparse
import sys
import time

from qschur import cycschur, hecke

PARAMS = ("1", "q")


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-m", type=int, default=3)
    ap.add_argument("--max-level", type=int, default=2)
    args = ap.parse_args(argv)
    ok = True
    for ell in range(1, args.max_level + 1):
        for m in range(1, args.max_m + 1):
            t0 = time.perf_counter()
            ctx = cycschur._context(m, PARAMS[:ell])
            pairs = cycschur.double_sst_basis(ctx, check=False)
            cell = {(e.S, e.T): e.hom.image for e in hecke.phi_basis(ctx, balanced=True)}
            bad = sum(f.hom.image != cell[(T, S)] for (S, T), f in pairs)
            ok &= not bad
            print(f"ell={ell} m={m}: {len(pairs)} pairs, {bad} mismatches ({time.perf_counter() - t0:.1f}s)")
    for ell in range(1, args.max_level + 1):
        ctx = cycschur._context(2, PARAMS[:ell])
        table = cycschur.structure_constants(ctx)
        nonzero = sum(1 for v in table.values() if v)
        print(f"structure constants ell={ell} m=2: {len(table)} products, {nonzero} nonzero")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
