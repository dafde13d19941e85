"""Command line interface.

Exit codes: 0 success, 1 a requested check failed, 2 usage error,
3 invalid input (graph, dimension, subset, caps).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from itertools import combinations

from . import __version__
from .decomposition import enumerate_admissible, high_degree_vertices, is_admissible
from .demos import DEMO_NAMES, DemoSpecError, demo_graph
from .errors import CheckFailed, DimensionTooSmall, ValidationError
from .graph import induced_subgraph, parse_forest
from .ideal import DEFAULT_LEVEL_CAP, component_ideal, export, ideal_closure
from .matroid import matroid_of_forest
from .verify import (
    SampleConfig,
    check_faithful,
    check_orthogonality,
    check_realizes,
    degeneration_witness,
    irredundancy_test,
    jacobian_dimension_check,
    sample_VS,
    vanishing_failures,
)

CHECKS = ("orthogonality", "faithful", "realize", "jacobian", "degeneration", "irredundancy", "vanishing")

EXIT_OK, EXIT_CHECK, EXIT_USAGE, EXIT_INVALID = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _workers():
    try:
        return max(1, int(os.environ.get("LSS_THREADS", "1")))
    except ValueError:
        return 1


def _load_graph(args):
    if args.graph and args.demo:
        raise UsageError("give either --graph or --demo, not both")
    if args.demo:
        return demo_graph(args.demo)
    if args.graph:
        if args.graph == "-":
            return parse_forest(sys.stdin.read())
        with open(args.graph, encoding="utf-8") as fh:
            return parse_forest(fh.read())
    raise UsageError("a graph is required: --graph FILE or --demo NAME")


def _check_d(d):
    if d < 3:
        raise DimensionTooSmall(
            f"d={d} is not supported: the decomposition is only implemented for d >= 3 "
            "(d <= 2 is out of scope, see README)"
        )


def _parse_subset(text):
    if text is None:
        return None
    text = text.strip().strip("{}")
    if not text:
        return ()
    try:
        return tuple(sorted({int(s) for s in text.split(",")}))
    except ValueError:
        raise UsageError(f"bad --subset {text!r}; expected comma separated vertex ids") from None


def _fmt_set(S):
    return "{" + ",".join(map(str, S)) + "}"


def _dump(doc):
    return json.dumps(doc, sort_keys=True)


# -- subcommands ----------------------------------------------------------------

def cmd_decompose(args, out):
    F = _load_graph(args)
    _check_d(args.d)
    res = enumerate_admissible(F, args.d, cap=args.cap)
    if args.json:
        print(_dump(res.to_dict()), file=out)
        return EXIT_OK
    print(f"forest: n={F.n}, edges={len(F.edges)}, d={args.d}", file=out)
    width = max(len("admissible S"), *(len(_fmt_set(c.S)) for c in res.components))
    print(f"{'admissible S':<{width}}  {'dim':>5}  {'induced edges':>13}", file=out)
    for c in res.components:
        print(f"{_fmt_set(c.S):<{width}}  {c.dim:>5}  {c.induced_edge_count:>13}", file=out)
    print(f"components: {len(res.components)}", file=out)
    print(f"variety dim: {res.variety_dim}", file=out)
    return EXIT_OK


def cmd_dims(args, out):
    F = _load_graph(args)
    _check_d(args.d)
    res = enumerate_admissible(F, args.d, cap=args.cap)
    if args.json:
        print(_dump({"n": F.n, "d": args.d, "variety_dim": res.variety_dim}), file=out)
    else:
        print(res.variety_dim, file=out)
    return EXIT_OK


def cmd_matroid(args, out):
    F = _load_graph(args)
    _check_d(args.d)
    print(_dump(matroid_of_forest(F, args.d).to_dict()), file=out)
    return EXIT_OK


def _ideal_object(args, F):
    S = _parse_subset(args.subset)
    cap, workers = args.level_cap, _workers()
    if getattr(args, "all_components", False):
        res = enumerate_admissible(F, args.d)
        return [component_ideal(F, args.d, c.S, args.depth, cap=cap, workers=workers) for c in res.components]
    if S is not None:
        return component_ideal(F, args.d, S, args.depth, cap=cap, workers=workers)
    return ideal_closure(F, args.d, args.depth, cap=cap, workers=workers)


def cmd_ideal(args, out):
    F = _load_graph(args)
    _check_d(args.d)
    obj = _ideal_object(args, F)
    if args.json:
        out.write(export(obj, "json"))
        return EXIT_OK
    if hasattr(obj, "linear"):
        print(f"component ideal for S={_fmt_set(obj.S)}, n={F.n}, d={args.d}", file=out)
        lin = ", ".join(p.format() for p in obj.linear) or "(none)"
        print(f"linear generators: {lin}", file=out)
        print("closure of G - S (defining ideal uses its radical, not computed here):", file=out)
        gens = obj.closure
    else:
        print(f"substitution closure, n={F.n}, d={args.d}", file=out)
        gens = obj
    for j, count in enumerate(gens.counts):
        print(f"  level {j}: {count} generators", file=out)
    for k, P in enumerate(gens.generators, start=1):
        print(f"  [{k}] deg {P.degree()}: {P.format()}", file=out)
    return EXIT_OK


def cmd_export(args, out):
    F = _load_graph(args)
    _check_d(args.d)
    out.write(export(_ideal_object(args, F), args.format))
    return EXIT_OK


def cmd_demo(args, out):
    names = [args.demo] if args.demo else list(DEMO_NAMES)
    for name in names:
        F = demo_graph(name)
        print(f"{name}: {F.to_text()}", end="", file=out)
    return EXIT_OK


def _run_check(name, F, d, cfg, args, res):
    """Returns (passed, details)."""
    comps = [c.S for c in res.components]
    if name in ("orthogonality", "faithful", "realize"):
        rows = []
        passed = True
        for S in comps:
            p = sample_VS(F, d, S, cfg, task=("verify",))
            rest = induced_subgraph(F, F.vertices - set(S))
            if name == "orthogonality":
                ok = not check_orthogonality(p, F)
            elif name == "faithful":
                ok = check_faithful(p, rest)
            else:
                ok = check_realizes(p, rest, d)
            passed &= ok
            rows.append({"S": list(S), "ok": ok})
        return passed, {"cases": rows}
    if name == "jacobian":
        rows = []
        for S in comps:
            r = jacobian_dimension_check(F, d, S, cfg)
            rows.append({"S": list(S), **r.to_dict()})
        return all(r["status"] == "confirmed" for r in rows), {"cases": rows}
    if name == "degeneration":
        H = high_degree_vertices(F, d)
        rows = []
        for size in range(1, min(args.max_subset, len(H)) + 1):
            for S in combinations(H, size):
                if is_admissible(F, d, S):
                    continue
                w = degeneration_witness(F, d, S, cfg)
                rows.append(w.to_dict())
        return all(r["ok"] for r in rows), {"cases": rows}
    if name == "irredundancy":
        rep = irredundancy_test(F, d, cfg, result=res)
        return rep.ok, rep.to_dict()
    if name == "vanishing":
        gens = ideal_closure(F, d, args.depth, cap=args.level_cap, workers=_workers())
        bad = vanishing_failures(gens, F, d, args.samples, cfg)
        return not bad, {"depth": args.depth, "level_counts": gens.counts, "samples": args.samples,
                         "nonzero": [list(b) for b in bad]}
    raise UsageError(f"unknown check {name!r}")


def cmd_verify(args, out):
    F = _load_graph(args)
    _check_d(args.d)
    checks = [c.strip() for c in args.checks.split(",") if c.strip()]
    unknown = [c for c in checks if c not in CHECKS]
    if unknown:
        raise UsageError(f"unknown checks {unknown}; choose from {', '.join(CHECKS)}")
    cfg = SampleConfig(seed=args.seed, pool=args.pool, max_retries=args.retries)
    res = enumerate_admissible(F, args.d, cap=args.cap)
    report = {"n": F.n, "d": args.d, "seed": args.seed, "pool": args.pool, "retries": args.retries,
              "checks": {}}
    all_ok = True
    for name in checks:
        try:
            ok, details = _run_check(name, F, args.d, cfg, args, res)
        except CheckFailed as exc:
            ok, details = False, {"error": str(exc)}
        all_ok &= ok
        report["checks"][name] = {"status": "pass" if ok else "fail", **details}
    report["ok"] = all_ok
    if args.json:
        print(_dump(report), file=out)
    else:
        for name in checks:
            entry = report["checks"][name]
            extra = f" ({len(entry['cases'])} cases)" if "cases" in entry else ""
            if "pairs" in entry:
                extra = f" ({len(entry['pairs'])} pairs)"
            if "error" in entry:
                extra = f" ({entry['error']})"
            print(f"{name}: {entry['status']}{extra}", file=out)
    return EXIT_OK if all_ok else EXIT_CHECK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lssforest",
        description="Irreducible components and ideals of orthogonal representation varieties of forests.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--graph", metavar="FILE", help="edge-list or JSON graph file ('-' for stdin)")
    graph.add_argument("--demo", metavar="NAME",
                       help="built-in graph: figure1 | binary-figure5 | star:n | path:n | caterpillar:k:t1,...,tk")
    graph.add_argument("--d", type=int, default=3, help="vector dimension d >= 3 (default 3)")
    graph.add_argument("--cap", type=int, default=24, help="max number of candidate vertices (default 24)")

    ideal = argparse.ArgumentParser(add_help=False)
    ideal.add_argument("--depth", type=int, default=1, help="closure depth (default 1)")
    ideal.add_argument("--subset", metavar="I,J,...", help="admissible subset S for a component ideal")
    ideal.add_argument("--all-components", action="store_true", help="every admissible component")
    ideal.add_argument("--level-cap", type=int, default=DEFAULT_LEVEL_CAP,
                       help=f"max generators per level (default {DEFAULT_LEVEL_CAP})")

    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("decompose", parents=[graph], help="admissible subsets and component dimensions")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("dims", parents=[graph], help="dimension of the whole variety")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("matroid", parents=[graph], help="the paving matroid M(G) as JSON")
    p.set_defaults(func=cmd_matroid)

    p = sub.add_parser("ideal", parents=[graph, ideal], help="substitution closure or component ideal")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("verify", parents=[graph], help="run exact certification checks")
    p.add_argument("--checks", default=",".join(CHECKS), help=f"comma separated subset of {','.join(CHECKS)}")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--pool", type=int, default=100, help="random numerators/denominators in [-B, B]")
    p.add_argument("--retries", type=int, default=50)
    p.add_argument("--samples", type=int, default=5, help="points for the vanishing check")
    p.add_argument("--depth", type=int, default=1, help="closure depth for the vanishing check")
    p.add_argument("--level-cap", type=int, default=DEFAULT_LEVEL_CAP)
    p.add_argument("--max-subset", type=int, default=3, help="largest non-admissible S for degeneration")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", parents=[graph, ideal], help="CAS script or JSON for ideals")
    p.add_argument("--format", default="m2", help="m2 | singular | json")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("demo", help="print the built-in graphs")
    p.add_argument("--demo", metavar="NAME", help="print only this one")
    p.set_defaults(func=cmd_demo)
    return parser


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, DemoSpecError) as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE
    except ValidationError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=err)
        return EXIT_CHECK
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_INVALID


def main():
    sys.exit(run())
