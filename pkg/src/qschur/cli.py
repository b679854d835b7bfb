"""Command line interface: python -m qschur <verb> <category> [options].

Output is JSON (schema-versioned header, sorted keys) or a fixed-width
table.  Exit codes: 0 success, 1 usage error, 2 internal failure with a
witness record on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import traceback
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import combinat, cycschur, diagram, hecke, polyrep
from .combinat import MultiComposition
from .ring import scalar, scalar_to_json

SCHEMA = "qschur-report/1"
VERBS = ("basis", "dim", "compose", "verify", "sst", "cellular", "check-iso")
CATEGORIES = ("affine-web", "affine-schur", "cyc-web", "cyc-schur")
WORKERS_ENV = "QSCHUR_WORKERS"


class UsageError(ValueError):
    pass


@dataclass
class Command:
    verb: str
    category: str
    level: int | None = None
    m: int | None = None
    us: tuple = ()
    source: str | None = None
    target: str | None = None
    first: str | None = None
    second: str | None = None
    relations: str = "all"
    max_thickness: int = 2
    dot_bound: int = 1
    probe_limit: int | None = None
    seed: int = 0
    fmt: str = "json"
    extra: dict = field(default_factory=dict)


# ---------------------------------------------------------------------------
# parsing


def _parse_us(text: str | None, level: int | None) -> tuple:
    if text is None:
        if level is None:
            return ()
        return tuple(str(k + 1) for k in range(level))
    us = tuple(t.strip() for t in text.split(",") if t.strip())
    for u in us:
        try:
            scalar(u)
        except Exception as e:  # noqa: BLE001 - reported as usage error
            raise UsageError(f"bad parameter {u!r}: {e}") from None
    if level is not None and len(us) != level:
        raise UsageError(f"--u gives {len(us)} parameters but --l is {level}")
    return us


def _composition(text: str) -> tuple:
    try:
        parts = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"bad composition {text!r}") from None
    if any(p <= 0 for p in parts):
        raise UsageError(f"composition {text!r} must have positive parts")
    return parts


def _multicomposition(text: str, level: int) -> MultiComposition:
    """'1|1' or '|1|1': components after the leading empty one may be given alone."""
    try:
        mc = MultiComposition.parse(text)
    except ValueError:
        raise UsageError(f"bad multicomposition {text!r}") from None
    if len(mc.components) == level:
        mc = MultiComposition(((),) + mc.components)
    if len(mc.components) != level + 1 or mc.components[0]:
        raise UsageError(f"{text!r} is not an object of level {level}")
    return mc


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qschur", description="Affine and cyclotomic q-Schur categories")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("category", choices=CATEGORIES)
    p.add_argument("--l", type=int, dest="level", help="level (number of red strands)")
    p.add_argument("--m", type=int, help="number of black strands (weight)")
    p.add_argument("--u", help="comma-separated red parameters, e.g. 1,q")
    p.add_argument("--source")
    p.add_argument("--target")
    p.add_argument("--first", help="s-expression of the upper factor (compose)")
    p.add_argument("--second", help="s-expression of the lower factor (compose)")
    p.add_argument("--relations", default="all")
    p.add_argument("--max-thickness", type=int, default=2)
    p.add_argument("--dot-bound", type=int, default=1)
    p.add_argument("--probe-limit", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", dest="fmt", choices=("json", "table"), default="json")
    return p


def parse_command(argv) -> Command:
    ns = build_parser().parse_args(argv)
    cyc = ns.category.startswith("cyc")
    if cyc and ns.level is None:
        ns.level = len(ns.u.split(",")) if ns.u else None
        if ns.level is None:
            raise UsageError("cyclotomic categories need --l or --u")
    if ns.level is not None and ns.level < 1:
        raise UsageError("--l must be positive")
    if ns.m is not None and ns.m < 0:
        raise UsageError("--m must be nonnegative")
    if ns.max_thickness < 1 or ns.dot_bound < 0:
        raise UsageError("thickness and dot bounds must be positive")
    return Command(
        verb=ns.verb,
        category=ns.category,
        level=ns.level,
        m=ns.m,
        us=_parse_us(ns.u, ns.level if cyc else None),
        source=ns.source,
        target=ns.target,
        first=ns.first,
        second=ns.second,
        relations=ns.relations,
        max_thickness=ns.max_thickness,
        dot_bound=ns.dot_bound,
        probe_limit=ns.probe_limit,
        seed=ns.seed,
        fmt=ns.fmt,
    )


# ---------------------------------------------------------------------------
# verbs


def _need(cmd: Command, *names):
    for n in names:
        if getattr(cmd, n) is None:
            raise UsageError(f"{cmd.verb} {cmd.category} needs --{n.replace('_', '-')}")


def _ctx(cmd: Command) -> hecke.AKContext:
    return cycschur._context(cmd.m, cmd.us)


def _label_record(lab) -> dict:
    return {"label": str(lab), "A": [list(r) for r in lab.A], "P": [[list(x) for x in r] for r in lab.P]}


def _objects(cmd: Command):
    if cmd.category.startswith("affine"):
        return _composition(cmd.source), _composition(cmd.target)
    if cmd.category == "cyc-web":
        return _composition(cmd.source), _composition(cmd.target)
    return _multicomposition(cmd.source, cmd.level), _multicomposition(cmd.target, cmd.level)


def _weight(obj) -> int:
    return obj.weight if isinstance(obj, MultiComposition) else sum(obj)


def do_basis(cmd: Command) -> dict:
    _need(cmd, "source", "target")
    src, tgt = _objects(cmd)
    if _weight(src) != _weight(tgt):
        return {"source": str(src), "target": str(tgt), "basis": []}
    if cmd.category.startswith("affine"):
        labels = combinat.enumerate_basis_labels(combinat.RPARMAT, tgt, src, dot_bound=cmd.dot_bound)
        return {"source": list(src), "target": list(tgt), "dot_bound": cmd.dot_bound, "basis": [_label_record(x) for x in labels]}
    cmd.m = _weight(src)
    kind = combinat.PARMAT_ELL if cmd.category == "cyc-web" else combinat.PARMAT_FLAT
    basis = cycschur.cyc_hom_basis(_ctx(cmd), src, tgt, kind=kind)
    return {"source": str(src), "target": str(tgt), "basis": [_label_record(lab) for lab, _ in basis]}


def do_dim(cmd: Command) -> dict:
    if cmd.category.startswith("affine"):
        _need(cmd, "source", "target")
        src, tgt = _objects(cmd)
        n = len(combinat.enumerate_basis_labels(combinat.RPARMAT, tgt, src, dot_bound=cmd.dot_bound)) if sum(src) == sum(tgt) else 0
        return {"source": list(src), "target": list(tgt), "dot_bound": cmd.dot_bound, "dimension": n}
    _need(cmd, "m")
    if cmd.category == "cyc-schur":
        dims = hecke.hom_dimensions(hecke.AKContext(cmd.m, cmd.us)) if cmd.m else {}
        blocks = {f"{a}->{b}": d for (a, b), d in dims.items()}
        return {"m": cmd.m, "level": cmd.level, "dimension": sum(dims.values()), "blocks": blocks}
    objs = combinat.compositions(cmd.m)
    blocks = {}
    for a in objs:
        for b in objs:
            blocks[f"{','.join(map(str, a))}->{','.join(map(str, b))}"] = len(
                combinat.enumerate_basis_labels(combinat.PARMAT_ELL, b, a, ell=cmd.level)
            )
    return {"m": cmd.m, "level": cmd.level, "dimension": sum(blocks.values()), "blocks": blocks}


def do_compose(cmd: Command) -> dict:
    _need(cmd, "first", "second")
    f, g = diagram.parse_sexpr(cmd.first), diagram.parse_sexpr(cmd.second)
    term = diagram.LinearCombination.of(f).compose(diagram.LinearCombination.of(g))
    out = {"term": diagram.to_sexpr(term)}
    if cmd.category.startswith("affine"):
        coeffs = polyrep.expand_in_basis(term, seed=cmd.seed)
        out["expansion"] = sorted(({"label": str(k), "coefficient": str(v)} for k, v in coeffs.items()), key=lambda r: r["label"])
    else:
        if not any(isinstance(x, diagram.Red) for x in term.source):
            # plain web diagrams sit right of all red strands
            term = term.pad(tuple(diagram.Red(u) for u in cmd.us), ())
            out["term"] = diagram.to_sexpr(term)
        src = term.source
        cmd.m = diagram.black_weight(src)
        h = cycschur.apply_G(term, _ctx(cmd))
        out["source"], out["target"] = str(h.source), str(h.target)
        out["image"] = str(h.image)
    return out


def _relation_names(cmd: Command) -> list:
    names = list(polyrep.RELATIONS) if cmd.relations == "all" else [x.strip() for x in cmd.relations.split(",")]
    bad = [n for n in names if n not in polyrep.RELATIONS]
    if bad:
        raise UsageError(f"unknown relations {bad}; known: {sorted(polyrep.RELATIONS)}")
    return names


def _verify_one(args) -> dict:
    category, name, params, us, limit, seed = args
    if category.startswith("affine"):
        rep = polyrep.verify_relation_report(name, limit=limit, seed=seed, **params)
        return rep.to_json()
    records = []
    reds = range(1, len(us) + 1) if "u" in params else [None]
    for k in reds:
        p = dict(params)
        ok = cycschur.relation_under_G(name, us, red_index=k, **p)
        records.append(ok)
    return {"relation": name, "params": {k: str(v) for k, v in params.items() if k != "u"}, "pass": all(records)}


def _workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def do_verify(cmd: Command) -> dict:
    jobs = []
    for name in _relation_names(cmd):
        if cmd.category == "affine-web" and name in polyrep.RED_RELATIONS:
            continue
        for p in polyrep.relation_instances(name, cmd.max_thickness):
            jobs.append((cmd.category, name, p, tuple(cmd.us), cmd.probe_limit, cmd.seed))
    n = _workers()
    if n > 1:
        with ProcessPoolExecutor(n) as ex:
            results = list(ex.map(_verify_one, jobs))
    else:
        results = [_verify_one(j) for j in jobs]
    for r in results:
        r.pop("elapsed", None)  # keeps the output byte-identical between runs
    results.sort(key=lambda r: (r["relation"], json.dumps(r["params"], sort_keys=True)))
    return {"all_pass": all(r["pass"] for r in results), "instances": len(results), "results": results}


def do_sst(cmd: Command) -> dict:
    _need(cmd, "source", "target")
    level = cmd.level or 1
    lam, mu = _multicomposition(cmd.source, level), _multicomposition(cmd.target, level)
    tabs = combinat.enumerate_sst(lam, mu)
    return {"shape": str(lam), "type": str(mu), "tableaux": [{"tableau": str(t), "rows": t.to_json()} for t in tabs]}


def do_cellular(cmd: Command) -> dict:
    _need(cmd, "m")
    ctx = hecke.AKContext(cmd.m, cmd.us)
    basis = hecke.phi_basis(ctx, check=True)
    ind = hecke.phi_independence(ctx, basis)
    recs = [
        {"shape": str(e.lam), "S": str(e.S), "T": str(e.T), "source": str(e.hom.source), "target": str(e.hom.target), "image": str(e.hom.image)}
        for e in basis
    ]
    return {
        "m": cmd.m,
        "level": cmd.level,
        "size": len(basis),
        "expected": sum(hecke.hom_dimensions(ctx).values()) if cmd.m else 0,
        "independent": all(c == r for c, r in ind.values()),
        "basis": recs,
    }


def do_check_iso(cmd: Command) -> dict:
    _need(cmd, "m")
    ctx = hecke.AKContext(cmd.m, cmd.us)
    pairs = cycschur.double_sst_basis(ctx, check=False)
    mismatches = []
    for (S, T), f in pairs:
        want = hecke.cellular_image(ctx, T, S, f.target, f.source, balanced=True)
        if f.hom.image != want:
            mismatches.append({"S": str(S), "T": str(T)})
    return {"m": cmd.m, "level": cmd.level, "pairs": len(pairs), "identity": not mismatches, "mismatches": mismatches}


DISPATCH = {
    "basis": do_basis,
    "dim": do_dim,
    "compose": do_compose,
    "verify": do_verify,
    "sst": do_sst,
    "cellular": do_cellular,
    "check-iso": do_check_iso,
}


def execute(cmd: Command) -> dict:
    if cmd.category.startswith("cyc") and cmd.verb in ("cellular", "check-iso", "sst") and cmd.category != "cyc-schur":
        raise UsageError(f"{cmd.verb} is defined for cyc-schur")
    if cmd.verb in ("cellular", "check-iso", "sst") and cmd.category.startswith("affine"):
        raise UsageError(f"{cmd.verb} needs a cyclotomic category")
    result = DISPATCH[cmd.verb](cmd)
    return {
        "schema": SCHEMA,
        "command": {"verb": cmd.verb, "category": cmd.category, "level": cmd.level, "m": cmd.m, "u": list(cmd.us), "seed": cmd.seed},
        "result": result,
    }


# ---------------------------------------------------------------------------
# rendering


def render(report: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report, sort_keys=True, indent=2, default=scalar_to_json)
    res = report["result"]
    rows = []
    for key in ("basis", "results", "tableaux", "mismatches"):
        if key in res:
            items = res[key]
            if not items:
                rows.append("(empty)")
                break
            cols = sorted({k for it in items for k in it if not isinstance(it[k], (list, dict))})
            table = [cols] + [[str(it.get(c, "")) for c in cols] for it in items]
            widths = [max(len(r[i]) for r in table) for i in range(len(cols))]
            body = sorted(table[1:])
            for r in [table[0]] + body:
                rows.append("  ".join(x.ljust(w) for x, w in zip(r, widths)).rstrip())
            break
    scalars = {k: v for k, v in res.items() if not isinstance(v, (list, dict))}
    head = [f"{k}: {scalars[k]}" for k in sorted(scalars)]
    for k in sorted(k for k, v in res.items() if isinstance(v, dict) and v):
        w = max(len(str(x)) for x in res[k])
        head.append(f"{k}:")
        head.extend(f"  {str(x).ljust(w)}  {res[k][x]}" for x in sorted(res[k], key=str))
    return "\n".join(head + rows)


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        cmd = parse_command(argv)
        report = execute(cmd)
    except UsageError as e:
        print(json.dumps({"schema": SCHEMA, "error": "usage", "message": str(e)}), file=sys.stderr)
        return 1
    except SystemExit as e:  # argparse
        return 1 if e.code else 0
    except Exception as e:  # noqa: BLE001 - internal failure, dump witness
        witness = getattr(e, "witness", None)
        print(
            json.dumps(
                {"schema": SCHEMA, "error": "internal", "type": type(e).__name__, "message": str(e), "witness": str(witness), "trace": traceback.format_exc()},
                sort_keys=True,
            ),
            file=sys.stderr,
        )
        return 2
    print(render(report, cmd.fmt))
    return 0


if __name__ == "__main__":
    sys.exit(main())
