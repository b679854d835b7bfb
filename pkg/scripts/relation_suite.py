"""Verify catalogued relations under the polynomial representation.

    python scripts/relation_suite.py --max-thickness 3 --limit 32 [names...]

Prints one line per relation (instances, pass/fail, seconds) and a JSON
summary to --out if given.
"""

import argparse
import json
import sys
import time

from qschur import polyrep


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("names", nargs="*")
    ap.add_argument("--max-thickness", type=int, default=3)
    ap.add_argument("--limit", type=int, default=32)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out")
    args = ap.parse_args(argv)
    names = args.names or sorted(polyrep.RELATIONS)
    summary, ok = [], True
    t_all = time.perf_counter()
    for name in names:
        t0 = time.perf_counter()
        inst = polyrep.relation_instances(name, args.max_thickness)
        bad = [p for p in inst if not polyrep.verify_relation_report(name, limit=args.limit, seed=args.seed, **p).passed]
        dt = time.perf_counter() - t0
        ok &= not bad
        summary.append({"relation": name, "instances": len(inst), "failures": [str(p) for p in bad], "seconds": round(dt, 2)})
        print(f"{name:22s} {len(inst):4d}  {'pass' if not bad else 'FAIL'}  {dt:7.1f}s", flush=True)
    print(f"total {time.perf_counter() - t_all:.1f}s")
    if args.out:
        with open(args.out, "w") as fh:
            json.dump(summary, fh, indent=2)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
