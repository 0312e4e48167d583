"""Command-line front end.

Exit codes: 0 success, 1 a claim or invariant failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from .complex import FieldSpec
from .enumeration import graph_key, graphs_on, labeled_graphs_on
from .graph import (
    Graph,
    GraphParseError,
    complete_graph,
    cycle_graph,
    is_chordal,
    parse_edge_list,
    path_graph,
)
from .ideal import DomainError, alexander_dual, edge_ideal, squarefree_component
from .resolution import betti_table, regularity
from . import golden
from .scm import InvariantViolation, classify, is_cm_graph, is_scm

COMMANDS = ("classify", "dual", "betti", "is-chordal", "is-scm", "is-cm", "paper-check", "survey")
MAX_SURVEY_N = 8

EXIT_OK, EXIT_FAILED, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    graph: Graph | None
    characteristic: int = 0
    output_format: str = "text"
    survey_max_n: int = 5
    parallelism: int = 1
    labeled: bool = False
    dual_degree: int | None = None
    of: str = "dual"

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InputError(f"unknown command {self.command!r}")
        if self.survey_max_n > MAX_SURVEY_N:
            raise InputError(f"--max-n is capped at {MAX_SURVEY_N}")
        if self.parallelism < 1:
            raise InputError("--jobs must be at least 1")

    @property
    def field(self) -> FieldSpec:
        return FieldSpec(self.characteristic)


def _print_json(obj) -> None:
    print(json.dumps(obj, sort_keys=True, separators=(",", ":")))


def _bool_report(cfg: RunConfig, name: str, value: bool) -> int:
    if cfg.output_format == "json":
        _print_json({"characteristic": cfg.characteristic, "edges": [list(e) for e in cfg.graph.sorted_edges()],
                     "n": cfg.graph.n, name: value})
    else:
        print(f"{name}: {str(value).lower()}  (char {cfg.characteristic})")
    return EXIT_OK


def cmd_classify(cfg: RunConfig) -> int:
    c = classify(cfg.graph, cfg.field)
    if cfg.output_format == "json":
        _print_json(c.to_json())
        return EXIT_OK
    print(f"graph: {cfg.graph!r}")
    for key, value in c.to_json().items():
        if key not in ("n", "edges"):
            print(f"{key}: {str(value).lower() if isinstance(value, bool) or value is None else value}")
    return EXIT_OK


def cmd_dual(cfg: RunConfig) -> int:
    ideal = edge_ideal(cfg.graph)
    if ideal.is_zero():
        raise InputError("the graph has no edges; its edge ideal is zero and has no dual here")
    dual = alexander_dual(ideal)
    if cfg.dual_degree is not None:
        dual = squarefree_component(dual, cfg.dual_degree)
    if cfg.output_format == "json":
        _print_json({"characteristic": cfg.characteristic, "degree": cfg.dual_degree,
                     "generators": dual.generator_lists(), "n": dual.n})
    else:
        print(str(dual))
    return EXIT_OK


def cmd_betti(cfg: RunConfig) -> int:
    ideal = edge_ideal(cfg.graph)
    if ideal.is_zero():
        raise InputError("the graph has no edges; its edge ideal is zero")
    if cfg.of == "dual":
        ideal = alexander_dual(ideal)
        if cfg.dual_degree is not None:
            ideal = squarefree_component(ideal, cfg.dual_degree)
            if ideal.is_zero():
                raise InputError(f"the degree-{cfg.dual_degree} component is zero")
    table = betti_table(ideal, cfg.field)
    if cfg.output_format == "json":
        _print_json({"betti": table.to_json(), "characteristic": cfg.characteristic,
                     "of": cfg.of, "regularity": regularity(table)})
    else:
        print(f"Betti table of {'I(G)^dual' if cfg.of == 'dual' else 'I(G)'} over {cfg.field}")
        print(table.to_text())
        print(f"regularity: {regularity(table)}")
    return EXIT_OK


def cmd_paper_check(cfg: RunConfig) -> int:
    results = golden.run_claims(cfg.field)
    failed = [name for name, ok, _ in results if not ok]
    for name, ok, detail in results:
        if cfg.output_format == "json":
            _print_json({"characteristic": cfg.characteristic, "claim": name, "detail": detail, "pass": ok})
        else:
            print(f"{'PASS' if ok else 'FAIL'}  {name}  [{detail}]")
    if cfg.output_format == "text":
        print(f"{len(results) - len(failed)}/{len(results)} claims hold over {cfg.field}")
    if failed:
        print("failed: " + "; ".join(failed), file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def _classify_for_survey(args):
    g, characteristic = args
    try:
        return classify(g, FieldSpec(characteristic)).to_json(), None
    except InvariantViolation as exc:
        return None, str(exc)


def survey_graphs(max_n: int, labeled: bool = False) -> list:
    out = []
    for n in range(1, max_n + 1):
        out.extend(sorted(labeled_graphs_on(n), key=graph_key) if labeled else graphs_on(n))
    return out


def cmd_survey(cfg: RunConfig) -> int:
    if cfg.survey_max_n < 2:
        raise InputError("--max-n must be at least 2")
    graphs = survey_graphs(cfg.survey_max_n, cfg.labeled)
    work = [(g, cfg.characteristic) for g in graphs]
    if cfg.parallelism > 1:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            results = list(pool.map(_classify_for_survey, work, chunksize=16))
    else:
        results = [_classify_for_survey(w) for w in work]
    census = {}
    for g, (row, error) in zip(graphs, results):
        if error is not None:
            print(f"invariant violation: {error}", file=sys.stderr)
            return EXIT_FAILED
        if cfg.output_format == "json":
            _print_json(row)
        counts = census.setdefault(g.n, dict.fromkeys(("total", "chordal", "unmixed", "cm", "scm"), 0))
        counts["total"] += 1
        for key in ("chordal", "unmixed", "cm", "scm"):
            counts[key] += row[key]
    if cfg.output_format == "json":
        return EXIT_OK
    kind = "labelled" if cfg.labeled else "isomorphism classes"
    print(f"survey of graphs on 1..{cfg.survey_max_n} vertices ({kind}), char {cfg.characteristic}")
    print(f"{'n':>3} {'total':>7} {'chordal':>8} {'unmixed':>8} {'CM':>6} {'SCM':>6}")
    totals = dict.fromkeys(("total", "chordal", "unmixed", "cm", "scm"), 0)
    for n, c in sorted(census.items()):
        print(f"{n:>3} {c['total']:>7} {c['chordal']:>8} {c['unmixed']:>8} {c['cm']:>6} {c['scm']:>6}")
        for key in totals:
            totals[key] += c[key]
    t = totals
    print(f"{'all':>3} {t['total']:>7} {t['chordal']:>8} {t['unmixed']:>8} {t['cm']:>6} {t['scm']:>6}")
    print("all invariants held: chordal => SCM, CM <=> SCM and unmixed, routes agree, obstruction sound")
    return EXIT_OK


HANDLERS = {
    "classify": cmd_classify,
    "dual": cmd_dual,
    "betti": cmd_betti,
    "is-chordal": lambda cfg: _bool_report(cfg, "chordal", is_chordal(cfg.graph)),
    "is-scm": lambda cfg: _bool_report(cfg, "scm", is_scm(cfg.graph, cfg.field)),
    "is-cm": lambda cfg: _bool_report(cfg, "cm", is_cm_graph(cfg.graph, cfg.field)),
    "paper-check": cmd_paper_check,
    "survey": cmd_survey,
}

GRAPH_COMMANDS = {"classify", "dual", "betti", "is-chordal", "is-scm", "is-cm"}


def _parse_inline_edges(spec: str, n: int | None) -> Graph:
    edges = []
    for col, token in _tokens(spec):
        parts = token.split("-")
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise GraphParseError(f"expected 'i-j', got {token!r}", 1, col)
        edges.append((int(parts[0]), int(parts[1])))
    top = max((v for e in edges for v in e), default=0)
    if n is None:
        n = top
    if top > n:
        raise InputError(f"edge endpoint {top} exceeds --n {n}")
    try:
        return Graph.from_edges(n, edges)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _tokens(spec: str):
    for match in re.finditer(r"[^,\s]+", spec):
        yield match.start() + 1, match.group()


def _graph_from_args(args) -> Graph:
    if args.cycle is not None:
        return cycle_graph(args.cycle)
    if args.complete is not None:
        return complete_graph(args.complete)
    if args.path is not None:
        return path_graph(args.path)
    if args.edges is not None:
        return _parse_inline_edges(args.edges, args.n)
    if args.input is not None:
        text = sys.stdin.read() if args.input == "-" else Path(args.input).read_text()
        return parse_edge_list(text)
    raise InputError("no graph given: use --input, --edges, --cycle, --complete or --path")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--char", type=int, default=0, metavar="P",
                        help="field characteristic: 0 or a prime below 2^31")
    common.add_argument("--format", choices=("text", "json"), default="text")

    graph_opts = argparse.ArgumentParser(add_help=False)
    source = graph_opts.add_mutually_exclusive_group()
    source.add_argument("--input", metavar="PATH", help="edge-list file ('-' for stdin)")
    source.add_argument("--edges", metavar="SPEC", help="inline edges such as '1-2,2-3'")
    source.add_argument("--cycle", type=int, metavar="N")
    source.add_argument("--complete", type=int, metavar="N")
    source.add_argument("--path", type=int, metavar="N")
    graph_opts.add_argument("--n", type=int, help="vertex count for --edges (default: largest endpoint)")

    parser = argparse.ArgumentParser(prog="edgescm", description="Algebraic properties of graph edge ideals.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("classify", parents=[common, graph_opts], help="run every decider on a graph")
    p = sub.add_parser("dual", parents=[common, graph_opts], help="Alexander dual of the edge ideal")
    p.add_argument("--degree", type=int, help="only the squarefree component in this degree")
    p = sub.add_parser("betti", parents=[common, graph_opts], help="graded Betti table")
    p.add_argument("--of", choices=("dual", "edge"), default="dual")
    p.add_argument("--degree", type=int, help="Betti table of this squarefree component of the dual")
    sub.add_parser("is-chordal", parents=[common, graph_opts])
    sub.add_parser("is-scm", parents=[common, graph_opts])
    sub.add_parser("is-cm", parents=[common, graph_opts])
    sub.add_parser("paper-check", parents=[common], help="replay the golden claims")
    p = sub.add_parser("survey", parents=[common], help="classify every small graph")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--labeled", action="store_true",
                   help="classify every labelled graph instead of one per isomorphism class")
    return parser


def config_from_args(args) -> RunConfig:
    if args.char < 0 or args.char >= 2**31:
        raise InputError("--char must be 0 or a prime below 2^31")
    try:
        FieldSpec(args.char)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    graph = _graph_from_args(args) if args.command in GRAPH_COMMANDS else None
    return RunConfig(
        command=args.command,
        graph=graph,
        characteristic=args.char,
        output_format=args.format,
        survey_max_n=getattr(args, "max_n", 5),
        parallelism=getattr(args, "jobs", 1),
        labeled=getattr(args, "labeled", False),
        dual_degree=getattr(args, "degree", None),
        of=getattr(args, "of", "dual"),
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
        return HANDLERS[cfg.command](cfg)
    except InvariantViolation as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_FAILED
    except GraphParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (InputError, DomainError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        # constructor range checks (e.g. --cycle 2)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
