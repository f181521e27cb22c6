"""Command-line interface with stable, scriptable text output.

Primary results go to stdout, diagnostics to stderr.  Exit statuses:
0 success, 1 verification failure found, 2 usage error, 3 input format
error, 4 resource guard exceeded, 5 internal invariant violation.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import verify as verify_mod
from .combinat import CanonicalRep, ffk_canonical, kk_canonical
from .complexes import ColoredComplex, face_vector
from .construct import ConstructionTrace, construct_balanced, construct_pair
from .errors import GuardExceeded, InputFormatError, InvariantViolation
from .graphs import clique_number, clique_vector, parse_graph
from .revlex import LevelSpec, colored_revlex_complex, revlex_complex, revlex_key

EXIT_OK = 0
EXIT_VERIFY_FAIL = 1
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_GUARD = 4
EXIT_INVARIANT = 5


def _read_source(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    path = Path(source)
    if not path.exists():
        raise InputFormatError(f"no such input file: {source}")
    return path.read_text()


def _load_graph(args):
    return parse_graph(_read_source(args.graph), fmt=args.format)


def _vec_line(vec) -> str:
    return " ".join(str(x) for x in vec)


def _rep_text(rep: CanonicalRep) -> str:
    if not rep.terms:
        return "(empty)"
    parts = []
    for n, j in rep.terms:
        rho = rep.budget_at(j)
        parts.append(f"C({n},{j})" if rho is None else f"C({n},{j})_{rho}")
    return " + ".join(parts)


def _sorted_facets(facets):
    return sorted(facets, key=lambda f: (len(f), revlex_key(f)))


def _print_complex(cc: ColoredComplex, out) -> None:
    coloring = " ".join(f"{v}:{cc.coloring[v]}" for v in cc.complex.vertices)
    print(f"coloring {coloring}".rstrip(), file=out)
    for facet in _sorted_facets(cc.complex.facets):
        print("facet " + " ".join(str(v) for v in facet), file=out)


def _print_trace(trace: ConstructionTrace, out, depth: int = 0) -> None:
    tag = f"trace[{depth}]"
    levels = ",".join(f"{s}:{m}" for s, m in trace.base_levels)
    head = f"{tag} kind={trace.kind} k={trace.k} colors={trace.colors} levels={levels}"
    if trace.pivot is not None:
        nn = ",".join(str(v) for v in trace.non_neighbors) or "-"
        head += f" pivot={trace.pivot} non-neighbors={nn}"
    print(head, file=out)
    for i, step in enumerate(trace.steps):
        print(
            f"{tag} step i={i} v={step.vertex} a={step.a} b={step.b} adds={step.added_vertex}",
            file=out,
        )
    if trace.sub is not None:
        _print_trace(trace.sub, out, depth + 1)


def _record_line(rec: verify_mod.GraphRecord) -> str:
    def vec(v):
        return ",".join(str(x) for x in v) if v else "-"

    return (
        f"graph={rec.graph_id} r={rec.colors}"
        f" cliquevec={vec(rec.clique_vec)} facevec={vec(rec.face_vec)}"
        f" margins={vec(rec.margins)}"
        f" equal={int(rec.vectors_equal)} coloring={int(rec.coloring_ok)}"
        f" balanced={int(rec.balanced_ok)} ok={int(rec.ok)}"
        f" error={rec.error or '-'}"
    )


def _cmd_cliquevec(args, out) -> int:
    g = _load_graph(args)
    print(_vec_line(clique_vector(g)), file=out)
    return EXIT_OK


def _cmd_kk_bound(args, out) -> int:
    rep = kk_canonical(args.m, args.k)
    print(f"{args.m} = {_rep_text(rep)}; bound = {rep.successor_bound()}", file=out)
    return EXIT_OK


def _cmd_ffk_bound(args, out) -> int:
    rep = ffk_canonical(args.m, args.k, args.r)
    print(f"{args.m} = {_rep_text(rep)}; bound = {rep.successor_bound()}", file=out)
    return EXIT_OK


def _cmd_canonical(args, out) -> int:
    rep = (
        kk_canonical(args.m, args.k)
        if args.r is None
        else ffk_canonical(args.m, args.k, args.r)
    )
    print(_rep_text(rep), file=out)
    return EXIT_OK


def _cmd_revlex(args, out) -> int:
    spec = LevelSpec.parse(args.levels)
    if args.colors is None:
        cx = revlex_complex(spec)
        print(f"face-vector {_vec_line(face_vector(cx))}", file=out)
        if args.emit_faces:
            for facet in _sorted_facets(cx.facets):
                print("facet " + " ".join(str(v) for v in facet), file=out)
    else:
        cc = colored_revlex_complex(spec, args.colors)
        print(f"face-vector {_vec_line(face_vector(cc.complex))}", file=out)
        if args.emit_faces:
            _print_complex(cc, out)
    return EXIT_OK


def _cmd_construct(args, out) -> int:
    g = _load_graph(args)
    cc, report = construct_balanced(g)
    print(f"colors {report.colors}", file=out)
    print(f"clique-vector {_vec_line(report.clique_vec)}", file=out)
    print(f"face-vector {_vec_line(report.face_vec)}", file=out)
    _print_complex(cc, out)
    if args.trace:
        print("margins " + (_vec_line(report.margins) or "-"), file=out)
    return EXIT_OK


def _cmd_construct_pair(args, out) -> int:
    g = _load_graph(args)
    r = args.r if args.r is not None else max(clique_number(g), 1)
    cc, trace = construct_pair(g, r, args.k)
    cv = clique_vector(g)
    targets = (
        cv[args.k] if args.k < len(cv) else 0,
        cv[args.k + 1] if args.k + 1 < len(cv) else 0,
    )
    print(f"colors {r}", file=out)
    print(f"k {args.k}", file=out)
    print(f"targets {targets[0]} {targets[1]}", file=out)
    print(f"face-vector {_vec_line(face_vector(cc.complex))}", file=out)
    _print_complex(cc, out)
    if args.trace:
        _print_trace(trace, out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    if args.exhaustive is not None:
        records = verify_mod.iter_exhaustive_records(args.exhaustive)
    elif args.random is not None:
        n, p, trials, seed = args.random
        records = verify_mod.iter_random_records(int(n), p, int(trials), int(seed))
    else:
        if args.graph is None:
            raise InputFormatError("verify needs a graph, --exhaustive or --random")
        records = iter([verify_mod.verify_graph(_load_graph(args))])

    total = passes = 0
    failures = []
    for rec in records:
        total += 1
        if rec.ok:
            passes += 1
        else:
            failures.append(rec)
        if args.output == "records":
            print(_record_line(rec), file=out)
    if args.output == "plain":
        print(f"graphs {total} pass {passes} fail {len(failures)}", file=out)
        for rec in failures:
            print("FAIL " + _record_line(rec), file=out)
    return EXIT_OK if not failures else EXIT_VERIFY_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="facevec",
        description="Clique vectors, shadow bounds, rev-lex complexes, and "
        "balanced complexes with prescribed face counts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_arg(p):
        p.add_argument("graph", help="graph file (edge list or graph6), or - for stdin")
        p.add_argument("--format", choices=["edges", "graph6"], default=None,
                       help="input format; default auto-detects by first byte")

    p = sub.add_parser("cliquevec", help="print the clique vector of a graph")
    add_graph_arg(p)
    p.set_defaults(func=_cmd_cliquevec)

    p = sub.add_parser("kk-bound", help="canonical representation and shadow bound")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_kk_bound)

    p = sub.add_parser("ffk-bound", help="colored canonical representation and bound")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=_cmd_ffk_bound)

    p = sub.add_parser("canonical", help="print the canonical term list only")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=None)
    p.set_defaults(func=_cmd_canonical)

    p = sub.add_parser("revlex", help="build a (colored) rev-lex complex")
    p.add_argument("--levels", required=True, help='e.g. "3:99,4:146"')
    p.add_argument("--colors", type=int, default=None)
    p.add_argument("--emit-faces", action="store_true", help="also print the facet list")
    p.set_defaults(func=_cmd_revlex)

    p = sub.add_parser("construct", help="balanced complex with a graph's clique vector")
    add_graph_arg(p)
    p.add_argument("--trace", action="store_true", help="also print bound margins")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("construct-pair", help="match clique counts at levels k and k+1")
    add_graph_arg(p)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r", type=int, default=None, help="color budget; default clique number")
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=_cmd_construct_pair)

    p = sub.add_parser("verify", help="construct and recount by brute force")
    p.add_argument("graph", nargs="?", default=None)
    p.add_argument("--format", choices=["edges", "graph6"], default=None)
    p.add_argument("--exhaustive", type=int, default=None, metavar="N")
    p.add_argument("--random", nargs=4, default=None, metavar=("N", "P", "TRIALS", "SEED"))
    p.add_argument("--output", choices=["plain", "records"], default="plain")
    p.set_defaults(func=_cmd_verify)

    return parser


def run(argv: list[str], out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except InputFormatError as exc:
        print(f"facevec: input error: {exc}", file=err)
        return EXIT_INPUT
    except GuardExceeded as exc:
        print(f"facevec: resource guard: {exc}", file=err)
        return EXIT_GUARD
    except InvariantViolation as exc:
        print(f"facevec: internal invariant violated: {exc}", file=err)
        return EXIT_INVARIANT
    except ValueError as exc:
        print(f"facevec: usage error: {exc}", file=err)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run(sys.argv[1:]))
