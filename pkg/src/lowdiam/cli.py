"""Command-line front end.

Exit codes: 0 success, 1 certification failure, 2 usage or parameter error.
"""
from __future__ import annotations

import argparse
import sys

from lowdiam import constructions as cons
from lowdiam.expansion import DEFAULT_CAP, bound_set
from lowdiam.graph import GraphError, format_edge_list, read_edge_list
from lowdiam.implications import CONSTRUCTION_FAMILIES, table2
from lowdiam.moore import ParameterError, profile_params
from lowdiam.report import analyze, render
from lowdiam.verify import run_suite, summary_ok, verify_graph

FAMILY_PARAMS = {
    "cycle": ("n",),
    "complete": ("m",),
    "complete_bipartite": ("m",),
    "petersen": (),
    "debruijn_digraph": ("b", "k"),
    "debruijn_undirected": ("b", "k"),
    "kautz": ("d", "k"),
    "polarity": ("q",),
    "two_cliques_bridged": ("n",),
}


class UsageError(Exception):
    pass


def _emit(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_generate(args) -> int:
    params = {}
    for name in FAMILY_PARAMS[args.family]:
        value = getattr(args, name)
        if value is None:
            raise UsageError(f"family {args.family} needs --{name}")
        params[name] = value
    g, _ = cons.family(args.family, **params)
    _emit(format_edge_list(g), args.output)
    return 0


def cmd_analyze(args) -> int:
    g = read_edge_list(args.path)
    rep = analyze(g, exact_cap=args.exact_cap, force_d=args.force_d, tol=args.tol)
    _emit(render(rep, args.format), args.output)
    return 0


def cmd_bounds(args) -> int:
    prof = profile_params(args.d, args.k, args.n, directed=args.directed)
    rows = []
    for b in bound_set(args.d, args.k, args.n, directed=args.directed, lambda2=args.lambda2):
        row = {"bound_id": b.bound_id, "quantity": b.quantity, "kind": b.kind,
               "applicability": b.applicability, "applicable": b.applicable, "value": b.value}
        if b.reason:
            row["reason"] = b.reason
        rows.append(row)
    tree = {"inputs": {"d": args.d, "k": args.k, "n": args.n, "regime": prof.regime,
                       "mu": prof.mu, "alpha": prof.alpha}, "bounds": rows}
    _emit(render(tree, args.format), args.output)
    return 0


def cmd_table2(args) -> int:
    rows = []
    for r in table2(args.family, args.d, args.k):
        row = {"bound_id": r.bound_id, "quantity": r.quantity, "published": r.published,
               "published_alpha": r.published_alpha, "bound_at_published_alpha": r.idealized,
               "recomputed": r.recomputed, "delta": r.delta, "flagged": r.flagged}
        if r.note:
            row["note"] = r.note
        rows.append(row)
    _emit(render({"family": args.family, "d": args.d, "k": args.k, "rows": rows}, args.format), args.output)
    return 0


def cmd_verify(args) -> int:
    if args.path is None and args.suite is None:
        raise UsageError("verify needs a graph file or --suite")
    if args.path is not None:
        g = read_edge_list(args.path)
        results = verify_graph(args.path, g, exact_cap=args.exact_cap, tol=args.tol, force_d=args.force_d)
    else:
        results = run_suite(args.suite, exact_cap=args.exact_cap, tol=args.tol)
    ok = summary_ok(results)
    if args.format == "structured":
        tree = {"passed": ok, "results": [r.__dict__ for r in results]}
        _emit(render(tree, "structured"), args.output)
    else:
        lines = [f"{r.status.upper():4} {r.item} {r.check}" + (f": {r.detail}" if r.detail else "")
                 for r in results]
        failed = sum(r.status == "fail" for r in results)
        warned = sum(r.status == "warn" for r in results)
        lines.append(f"{'PASS' if ok else 'FAIL'}: {len(results)} checks, {failed} failed, {warned} warnings")
        _emit("\n".join(lines) + "\n", args.output)
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lowdiam", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, fmt=True):
        p.add_argument("--output", help="write to this path instead of standard output")
        if fmt:
            p.add_argument("--format", choices=("text", "structured"), default="text")

    p = sub.add_parser("generate", help="write a family member as an edge list")
    p.add_argument("family", choices=sorted(FAMILY_PARAMS))
    for name in ("n", "m", "b", "d", "k", "q"):
        p.add_argument(f"--{name}", type=int)
    common(p, fmt=False)
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("analyze", help="full analysis report of an edge-list file")
    p.add_argument("path")
    p.add_argument("--exact-cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--force-d", type=int)
    p.add_argument("--tol", type=float)
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bounds", help="evaluate every applicable bound at (d, k, n)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--directed", action="store_true")
    p.add_argument("--lambda2", type=float)
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("table2", help="guarantees for a classical construction")
    p.add_argument("family", choices=CONSTRUCTION_FAMILIES)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    common(p)
    p.set_defaults(func=cmd_table2)

    p = sub.add_parser("verify", help="certify a graph file or a built-in suite")
    p.add_argument("path", nargs="?")
    p.add_argument("--suite", choices=("standard",))
    p.add_argument("--exact-cap", type=int, default=DEFAULT_CAP)
    p.add_argument("--force-d", type=int)
    p.add_argument("--tol", type=float)
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ParameterError, GraphError, ValueError, OSError) as exc:
        print(f"lowdiam: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
