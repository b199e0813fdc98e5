"""Command-line front end.

Exit codes: 0 success / equal / all checks pass, 1 checks failed or polynomials
differ, 2 bad input, 3 enumeration cap exceeded or an extractor precondition
failed.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import formulas as F
from . import invariants as inv
from .catalog import DEFAULT_SEED, parse_catalog
from .enumerator import DEFAULT_MAX_N, EnumerationCapError, boundary_polynomial
from .graphs import Graph, GraphError, family, load_graph
from .poly import BoundaryPolynomial, emit
from .verify import CHECKS, run_checks

EXIT_FAIL, EXIT_INPUT, EXIT_CAP = 1, 2, 3


class CliError(Exception):
    def __init__(self, msg: str, code: int):
        super().__init__(msg)
        self.code = code


@dataclass
class Source:
    """One graph source: a file or a family request."""

    graph: Graph
    family: str | None = None
    params: tuple[int, ...] = ()


def _family_params(args) -> tuple[int, ...]:
    name = args.family.replace("-", "_")
    if name == "prism":
        return ()
    if name == "double_star":
        if args.r is None or args.t is None:
            raise CliError("double_star needs --r and --t", EXIT_INPUT)
        return (args.r, args.t)
    if args.n is None:
        raise CliError(f"family {args.family} needs --n", EXIT_INPUT)
    if name == "complete_bipartite":
        if args.m is None:
            raise CliError("complete_bipartite needs --n and --m", EXIT_INPUT)
        return (args.n, args.m)
    return (args.n,)


def _sources(args, want: int | None = None) -> list[Source]:
    out = []
    try:
        for path in args.input or []:
            out.append(Source(load_graph(path)))
        if args.family:
            params = _family_params(args)
            out.append(Source(family(args.family, *params), args.family.replace("-", "_"), params))
    except (GraphError, OSError, UnicodeDecodeError) as exc:
        raise CliError(f"cannot read graph: {exc}", EXIT_INPUT) from exc
    if want is not None and len(out) != want:
        raise CliError(f"expected {want} graph source(s), got {len(out)}", EXIT_INPUT)
    return out


def _polynomial(src: Source, args) -> BoundaryPolynomial:
    method = args.method
    if method == "formula" and (src.family is None or src.family not in F.FAMILY_FORMULAS):
        raise CliError("--method formula needs a --family with a closed form", EXIT_INPUT)
    if method in ("formula", "auto") and src.family in F.FAMILY_FORMULAS:
        return F.family_polynomial(src.family, *src.params)
    try:
        return boundary_polynomial(src.graph, max_n=args.max_n, workers=args.threads)
    except EnumerationCapError as exc:
        raise CliError(str(exc), EXIT_CAP) from exc
    except ValueError as exc:
        raise CliError(str(exc), EXIT_INPUT) from exc


def cmd_compute(args) -> int:
    (src,) = _sources(args, 1)
    print(emit(_polynomial(src, args), args.format))
    return 0


def cmd_invariants(args) -> int:
    (src,) = _sources(args, 1)
    p = _polynomial(src, args)
    try:
        report = inv.invariant_report(p)
    except (inv.NotAGraphPolynomialError, ValueError) as exc:
        raise CliError(f"extractor failed: {exc}", EXIT_CAP) from exc
    print(json.dumps(report.to_dict()))
    return 0


def cmd_verify(args) -> int:
    graphs = [s.graph for s in _sources(args)]
    if args.catalog:
        try:
            graphs += parse_catalog(args.catalog, args.seed)
        except ValueError as exc:
            raise CliError(str(exc), EXIT_INPUT) from exc
    if not graphs:
        raise CliError("verify needs --input, --family or --catalog", EXIT_INPUT)
    too_big = [g for g in graphs if g.n > args.max_n]
    if too_big:
        raise CliError(f"graph of order {too_big[0].n} exceeds --max-n {args.max_n}", EXIT_CAP)
    names = [s.strip() for s in args.check.split(",") if s.strip()]
    try:
        outcomes = run_checks(names, graphs)
    except KeyError as exc:
        raise CliError(str(exc.args[0]), EXIT_INPUT) from exc
    for o in outcomes:
        status = "PASS" if o.ok else "FAIL"
        line = f"{status} {o.check} ({o.graphs} graph{'s' if o.graphs != 1 else ''})"
        if not o.ok:
            line += f": {o.counterexample}"
        print(line)
    return 0 if all(o.ok for o in outcomes) else EXIT_FAIL


def cmd_compare(args) -> int:
    sources = _sources(args)
    if len(sources) != 2:
        raise CliError(f"compare needs exactly two graph sources, got {len(sources)}", EXIT_INPUT)
    a, b = (_polynomial(s, args) for s in sources)
    d = a.first_difference(b)
    if d is None:
        print("EQUAL")
        print(emit(a, args.format))
        return 0
    i, j, ca, cb = d
    print(f"DIFFERENT at coefficient ({i},{j}): {ca} vs {cb}")
    return EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", action="append", metavar="PATH",
                        help="edge-list JSON or graph6 file (repeatable for compare)")
    common.add_argument("--family", help="named family, e.g. complete, cycle, double_star")
    common.add_argument("--n", type=int)
    common.add_argument("--m", type=int, help="second part size for complete_bipartite")
    common.add_argument("--r", type=int)
    common.add_argument("--t", type=int)
    common.add_argument("--method", choices=["auto", "enumerate", "formula"], default="auto")
    common.add_argument("--format", choices=["plain", "latex", "json"], default="plain")
    common.add_argument("--max-n", type=int, default=DEFAULT_MAX_N, dest="max_n")
    common.add_argument("--threads", type=int, default=1)

    parser = argparse.ArgumentParser(prog="boundpoly", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("compute", parents=[common], help="print the boundary polynomial")
    sub.add_parser("invariants", parents=[common], help="parameters read off the polynomial")
    v = sub.add_parser("verify", parents=[common], help="check identities against enumeration")
    v.add_argument("--check", default="all", help=f"comma list of: all, {', '.join(CHECKS)}")
    v.add_argument("--catalog", help="n<=K, n=K or n=K:COUNT")
    v.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sub.add_parser("compare", parents=[common], help="compare two graphs' polynomials")
    return parser


COMMANDS = {
    "compute": cmd_compute,
    "invariants": cmd_invariants,
    "verify": cmd_verify,
    "compare": cmd_compare,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1 or args.max_n < 1:
        print("error: --threads and --max-n must be >= 1", file=sys.stderr)
        return EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
