"""Command-line entry point.

Exit codes: 0 success / all checks passed, 1 violations found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import logging
import os
import random
import sys
from typing import Iterable

from . import harness
from .assoc import build_associated, check_properties, sample_trails, to_dot
from .extremal import construct_extremal, construct_gap_minus, construct_gap_zero
from .families import KINDS, TWO_PARAMETER, FamilySpec, generate_family
from .graph import Graph, GraphError, complement, read_edge_list, write_edge_list
from .graph6 import decode_graph6, encode_graph6, read_graph6_lines
from .solver import analyze, global_ld_number, ld_number

class UsageError(Exception):
    pass


def _fmt(vs: Iterable[int]) -> str:
    return ",".join(map(str, vs)) or "-"


def _load_text_graph(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise UsageError("empty graph input")
    head = lines[0].split()
    if len(head) == 2 and all(tok.lstrip("-").isdigit() for tok in head):
        return read_edge_list(lines)
    return decode_graph6(lines[0])


def _resolve_graph(args) -> Graph:
    family = getattr(args, "family", None)
    if family:
        if family not in KINDS:
            raise UsageError(f"--family: unknown kind {family!r}")
        if family in TWO_PARAMETER:
            if args.r is None or args.s is None:
                raise UsageError(f"--family {family} needs --r and --s")
            return generate_family(FamilySpec(family, r=args.r, s=args.s))
        if args.n is None:
            raise UsageError(f"--family {family} needs --n")
        return generate_family(FamilySpec(family, n=args.n))
    if not args.input:
        raise UsageError("no graph given: pass a graph6 string, a file, or --family")
    if args.input == "-":
        return _load_text_graph(sys.stdin.read())
    if os.path.exists(args.input):
        with open(args.input) as fh:
            return _load_text_graph(fh.read())
    return decode_graph6(args.input)


def _add_graph_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="graph6 string, graph6/edge-list file, or '-' for stdin")
    p.add_argument("--family", help=f"named family: {', '.join(KINDS)}")
    p.add_argument("--n", type=int)
    p.add_argument("--r", type=int)
    p.add_argument("--s", type=int)


def cmd_lambda(args) -> int:
    g = _resolve_graph(args)
    lam = ld_number(g)
    lam_bar = ld_number(complement(g))
    print(f"lambda={lam.value} witness={_fmt(lam.witness)}")
    print(f"lambda_complement={lam_bar.value} witness={_fmt(lam_bar.witness)}")
    return 0


def cmd_global(args) -> int:
    g = _resolve_graph(args)
    res = global_ld_number(g)
    print(f"lambda_g={res.value} witness={_fmt(res.witness)}")
    print(f"lambda={ld_number(g).value} lambda_complement={ld_number(complement(g)).value}")
    return 0


def cmd_assoc(args) -> int:
    g = _resolve_graph(args)
    try:
        s = [int(x) for x in args.set.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"--set: expected comma-separated vertices, got {args.set!r}")
    a = build_associated(g, s)
    if args.dot:
        text = to_dot(a)
        if args.dot == "-":
            sys.stdout.write(text)
        else:
            with open(args.dot, "w") as fh:
                fh.write(text)
    info = analyze(g, s)
    print(f"vertices={_fmt(a.vertices)} z={a.z}")
    for x, y, lab in a.edges:
        print(f"edge {x} {y} label={lab}")
    print("levels " + " ".join(f"{x}:{a.level(x)}" for x in a.vertices))
    print(f"dominating_vertex={info.dominating_vertex if info.dominating_vertex is not None else '-'} global={info.is_global}")
    rep = check_properties(a, sample_trails(a, args.walks, random.Random(args.seed)))
    print(f"properties={'ok' if rep.ok else 'FAILED ' + '; '.join(rep.failures)}")
    return 0 if rep.ok else 1


def _graph_text(g: Graph, fmt: str) -> str:
    return encode_graph6(g) + "\n" if fmt == "graph6" else write_edge_list(g)


def cmd_construct(args) -> int:
    if args.kind == "extremal":
        fam = construct_extremal(args.r, args.s)
        sys.stdout.write(_graph_text(fam.graph, args.format))
        subsets = " ".join("".join(map(str, sorted(x))) if args.r < 10 else "{" + _fmt(sorted(x)) + "}" for x in fam.w_subsets)
        print(f"# r={fam.r} s={fam.s} family={fam.source} W={subsets}")
        print(f"# certified lambda={fam.lambda_value} lambda_complement={fam.lambda_complement}")
        return 0
    build = construct_gap_minus if args.kind == "bistar" else construct_gap_zero
    g = build(args.r, args.s, certify=args.certify)
    sys.stdout.write(_graph_text(g, args.format))
    if args.certify:
        print(f"# certified lambda={ld_number(g).value} lambda_complement={ld_number(complement(g)).value}")
    return 0


def cmd_family(args) -> int:
    kind = args.kind
    if kind not in KINDS:
        raise UsageError(f"family: unknown kind {kind!r}; expected one of {', '.join(KINDS)}")
    want = 2 if kind in TWO_PARAMETER else 1
    if len(args.params) != want:
        raise UsageError(f"family {kind}: expected {want} parameter(s), got {len(args.params)}")
    spec = FamilySpec(kind, r=args.params[0], s=args.params[1]) if want == 2 else FamilySpec(kind, n=args.params[0])
    g = generate_family(spec)
    sys.stdout.write(_graph_text(g, args.format))
    return 0


def _emit(reports, fmt: str, output: str | None) -> None:
    text = harness.reports_to_json(reports) + "\n" if fmt == "json" else harness.reports_to_csv(reports)
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_suite(name: str, args) -> harness.VerificationReport:
    graphs = None
    if getattr(args, "graph6", None):
        with open(args.graph6) as fh:
            graphs = list(read_graph6_lines(fh))
    n_max = getattr(args, "n_max", None)
    seed = getattr(args, "seed", 0)
    kw = {}
    if name in ("difuno", "teoremon", "global-symmetry", "bipartite-gap", "assoc"):
        if n_max is not None:
            kw["n_max"] = n_max
        if graphs is not None:
            kw["graphs"] = graphs
    if name in ("bipartite-gap", "assoc", "cactus"):
        kw["seed"] = seed
    if name == "table1" and n_max is not None:
        kw["n_max"] = n_max
    if name == "cactus" and getattr(args, "samples", None):
        kw["samples"] = args.samples
    if name in ("table1", "cactus", "constructions") and graphs is not None:
        raise UsageError(f"--graph6: suite {name!r} does not take a graph stream")
    return harness.SUITES[name](**kw)


def cmd_verify(args) -> int:
    names = list(harness.SUITES) if args.suite == "all" else [args.suite]
    # keep stdout clean when the report itself goes there
    out = sys.stderr if args.format and not args.output else sys.stdout
    reports = []
    for name in names:
        rep = _run_suite(name, args)
        print(rep.summary(), file=out)
        reports.append(rep)
    if args.output or args.format:
        _emit(reports, args.format or "json", args.output)
    return 0 if all(r.passed for r in reports) else 1


# small universes so `report` without inputs finishes quickly
_QUICK = {
    "difuno": {"n_max": 6},
    "teoremon": {"n_max": 5},
    "global-symmetry": {"n_max": 5},
    "table1": {"n_max": 10},
    "bipartite-gap": {"n_max": 7},
    "assoc": {"n_max": 5, "samples_per_graph": 20},
    "cactus": {"samples": 200},
    "constructions": {"cases": [(3, 6), (4, 7)], "bistar_max": 4},
}


def cmd_report(args) -> int:
    if args.inputs:
        reports = []
        for path in args.inputs:
            with open(path) as fh:
                text = fh.read()
            if text.lstrip().startswith("{"):
                reports += harness.reports_from_json(text)
            else:
                reports += harness.reports_from_csv(text)
    else:
        reports = [harness.SUITES[name](**kw) for name, kw in _QUICK.items()]
    _emit(reports, args.format, args.output)
    return 0 if all(r.passed for r in reports) else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="locdom", description="Location-domination invariants and verification suites.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("lambda", help="location-domination number of a graph and its complement")
    _add_graph_args(p)
    p.set_defaults(func=cmd_lambda)

    p = sub.add_parser("global", help="global location-domination number")
    _add_graph_args(p)
    p.set_defaults(func=cmd_global)

    p = sub.add_parser("assoc", help="associated graph of an LD-set")
    _add_graph_args(p)
    p.add_argument("--set", required=True, help="comma-separated LD-set, e.g. 0,3")
    p.add_argument("--dot", help="write DOT to this file ('-' for stdout)")
    p.add_argument("--walks", type=int, default=100, help="random trails for the walk-closure check")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_assoc)

    p = sub.add_parser("construct", help="bipartite graph with a prescribed gap between lambda and its complement")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--kind", choices=["extremal", "bistar", "biclique"], default="extremal")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.add_argument("--certify", action="store_true", help="run the exact solver on bistar/biclique output")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("family", help="generate a named graph")
    p.add_argument("kind", help=", ".join(KINDS))
    p.add_argument("params", type=int, nargs="+", help="n, or r s for two-parameter families")
    p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=list(harness.SUITES) + ["all"])
    p.add_argument("--n-max", type=int, dest="n_max")
    p.add_argument("--graph6", help="file of graph6 lines to check instead of the internal enumeration")
    p.add_argument("--samples", type=int, help="cactus suite sample count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=["json", "csv"])
    p.add_argument("--output", help="write the report here instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("report", help="emit reports (converts saved reports, or runs quick suites)")
    p.add_argument("inputs", nargs="*", help="saved JSON or CSV reports")
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--output")
    p.set_defaults(func=cmd_report)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (UsageError, GraphError, OSError) as exc:
        print(f"locdom {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
