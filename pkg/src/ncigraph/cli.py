"""Command-line interface: ``ncigraph <command> [options] [INPUT]``.

Exit status is 0 on success (a NEITHER verdict is still success), 2 on
unreadable or malformed input, and 3 when an operation's precondition fails.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import __version__
from .betti import betti_table, total_rank_check
from .classify import ClassificationReport, classify, is_nci_definitional
from .enumeration import (
    HypergraphSearchParams,
    cross_validate,
    generate_connected_graphs,
    generate_graphs,
    hypergraph_nci_search,
    nci_census,
)
from .formats import (
    ParseError,
    encode_graph6,
    parse_graph_input,
    parse_ideal_input,
    render_dot,
    render_edge_list,
)
from .graph import Graph, GraphError, invert_vertex, is_ci_graph
from .ideal import IdealError, MonomialIdeal, edge_ideal, is_complete_intersection

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_PRECONDITION = 3

log = logging.getLogger("ncigraph")


class CommandError(Exception):
    def __init__(self, message: str, status: int):
        super().__init__(message)
        self.status = status


def _read_input(args) -> str:
    if args.inline is not None:
        if args.input is not None:
            raise CommandError("give either INPUT or --inline, not both", EXIT_PARSE)
        return args.inline.replace(";", "\n")
    if args.input is None or args.input == "-":
        return sys.stdin.read()
    try:
        return Path(args.input).read_text()
    except OSError as exc:
        raise CommandError(f"cannot read {args.input}: {exc.strerror}", EXIT_PARSE) from exc


def _graph(args) -> Graph:
    return parse_graph_input(_read_input(args))


def _ideal(args) -> MonomialIdeal:
    if getattr(args, "ideal", False):
        return parse_ideal_input(_read_input(args))
    return edge_ideal(_graph(args))


def _graph_dict(G: Graph) -> dict:
    return {
        "vertices": G.sorted_vertices(),
        "edges": [list(e) for e in G.sorted_edges()],
        "isolated": G.isolated_vertices(),
    }


def _report_text(r: ClassificationReport) -> str:
    lines = [f"verdict: {r.verdict.value}", f"method: {r.method}"]
    if r.failing_vertex is not None:
        lines.append(f"failing vertex: {r.failing_vertex}")
    elif r.obstruction is not None:
        ob = r.obstruction
        lines.append(f"obstruction: {ob.tree_type} on {' '.join(ob.vertices)}")
        lines.append("tree edges: " + ", ".join(f"{u}-{v}" for u, v in ob.sorted_tree_edges()))
    elif r.rule is not None:
        lines.append(f"rule: {r.rule}")
    return "\n".join(lines) + "\n"


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_classify(args) -> str:
    G = _graph(args)
    report = is_nci_definitional(G) if args.method == "definitional" else classify(G)
    if args.format == "json":
        return _dump(report.to_dict())
    if args.format == "dot":
        return render_dot(G, report.obstruction)
    return _report_text(report)


def cmd_invert(args) -> str:
    G = _graph(args)
    H = invert_vertex(G, args.vertex)
    if args.format == "json":
        return _dump(_graph_dict(H))
    if args.format == "dot":
        return render_dot(H, name="inverted")
    return render_edge_list(H)


def cmd_ci_check(args) -> str:
    if args.ideal:
        result = is_complete_intersection(_ideal(args))
    else:
        result = is_ci_graph(_graph(args))
    if args.format == "json":
        return _dump({"complete_intersection": result})
    return ("CI" if result else "not CI") + "\n"


def cmd_betti(args) -> str:
    t = betti_table(_ideal(args), method=args.method)
    if args.format == "json":
        return _dump(t.to_dict())
    lines = [
        f"height: {t.ideal_height}",
        "sequence: " + " ".join(map(str, t.sequence())),
        f"total: {t.total}",
        "i j rank",
    ]
    lines += [f"{i} {j} {r}" for (i, j), r in sorted(t.entries.items())]
    return "\n".join(lines) + "\n"


def cmd_total_rank(args) -> str:
    r = total_rank_check(_ideal(args))
    if args.format == "json":
        return _dump(r.to_dict())
    return (
        f"total: {r.total}\nheight: {r.height}\nbound: {r.bound}\n"
        f"meets bound: {str(r.meets_bound).lower()}\nequality: {str(r.equality).lower()}\n"
    )


def cmd_enumerate(args) -> str:
    graphs = list(generate_graphs(args.n) if args.all else generate_connected_graphs(args.n))
    if args.format == "json":
        return _dump([{"graph6": encode_graph6(G), "edges": [list(e) for e in G.sorted_edges()]} for G in graphs])
    return "".join(encode_graph6(G) + "\n" for G in graphs)


def cmd_cross_validate(args) -> str:
    r = cross_validate(args.n, connected_only=not args.all)
    d = r.to_dict()
    if args.format == "json":
        return _dump({"checked": d["checked"], "mismatches": d["mismatches"]})
    lines = [f"n={args.n} checked={r.checked} mismatches={len(r.mismatches)}"]
    lines += [f"  {m.graph6} definitional={m.definitional} structural={m.structural}" for m in r.mismatches]
    return "\n".join(lines) + "\n"


def cmd_census(args) -> str:
    rows = nci_census(args.n_max)
    if args.format == "json":
        return _dump([r.to_dict() for r in rows])
    lines = ["n connected nci neither ci"]
    lines += [f"{r.n} {r.connected_count} {r.nci_count} {r.neither_count} {r.ci_count}" for r in rows]
    return "\n".join(lines) + "\n"


def cmd_hypergraph_search(args) -> str:
    params = HypergraphSearchParams(args.max_vars, args.max_gens, args.max_degree, args.samples, args.seed)
    found = hypergraph_nci_search(params)
    if args.format == "json":
        return _dump([[str(g) for g in I.sorted_generators()] for I in found])
    return "".join(str(I) + "\n" for I in found)


def _add_input(p: argparse.ArgumentParser) -> None:
    p.add_argument("input", nargs="?", help="input file, '-' or omitted for standard input")
    p.add_argument("--inline", metavar="TEXT", help="input given directly; ';' separates lines")


def _add_output(p: argparse.ArgumentParser, formats=("text", "json")) -> None:
    p.add_argument("--format", choices=formats, default="text")
    p.add_argument("--output", metavar="PATH", help="write here instead of standard output")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ncigraph", description="Nearly complete intersection tools for edge ideals.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    p = sub.add_parser("classify", help="decide CI / NCI / NEITHER for a graph")
    _add_input(p)
    _add_output(p, ("text", "json", "dot"))
    p.add_argument("--method", choices=("structural", "definitional"), default="structural")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("invert", help="invert a vertex")
    _add_input(p)
    _add_output(p, ("text", "json", "dot"))
    p.add_argument("--vertex", required=True)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("ci-check", help="complete-intersection test for a graph or ideal")
    _add_input(p)
    _add_output(p)
    p.add_argument("--ideal", action="store_true", help="input is a monomial list, not a graph")
    p.set_defaults(func=cmd_ci_check)

    p = sub.add_parser("betti", help="graded Betti numbers of R/I")
    _add_input(p)
    _add_output(p)
    p.add_argument("--ideal", action="store_true", help="input is a monomial list, not a graph")
    p.add_argument("--method", choices=("nerve", "taylor"), default="nerve")
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("total-rank", help="compare total Betti number with 2^c + 2^(c-1)")
    _add_input(p)
    _add_output(p)
    p.add_argument("--ideal", action="store_true", help="input is a monomial list, not a graph")
    p.set_defaults(func=cmd_total_rank)

    p = sub.add_parser("enumerate", help="list connected graphs up to isomorphism (graph6)")
    _add_output(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true", help="include disconnected graphs")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("cross-validate", help="compare both NCI deciders on all graphs of one size")
    _add_output(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--all", action="store_true", help="include disconnected graphs")
    p.set_defaults(func=cmd_cross_validate)

    p = sub.add_parser("census", help="verdict counts over connected graphs")
    _add_output(p)
    p.add_argument("--n-max", type=int, required=True)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("hypergraph-search", help="search for NCI ideals with a generator of degree >= 3")
    _add_output(p)
    defaults = HypergraphSearchParams()
    p.add_argument("--max-vars", type=int, default=defaults.max_vars)
    p.add_argument("--max-gens", type=int, default=defaults.max_gens)
    p.add_argument("--max-degree", type=int, default=defaults.max_degree)
    p.add_argument("--samples", type=int, default=defaults.sample_count)
    p.add_argument("--seed", type=int, default=defaults.seed)
    p.set_defaults(func=cmd_hypergraph_search)
    return parser


def run(argv: Optional[Sequence[str]] = None) -> tuple[int, str]:
    """Execute one command; returns the exit status and the text written to the output."""
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except CommandError as exc:
        log.error("%s", exc)
        return exc.status, ""
    except ParseError as exc:
        log.error("parse error: %s", exc)
        return EXIT_PARSE, ""
    except (GraphError, IdealError, ValueError) as exc:
        log.error("%s", exc)
        return EXIT_PRECONDITION, ""
    if args.output:
        Path(args.output).write_text(out)
    else:
        sys.stdout.write(out)
    return EXIT_OK, out


def main(argv: Optional[Sequence[str]] = None) -> int:
    logging.basicConfig(format="%(levelname)s: %(message)s", level=logging.WARNING, stream=sys.stderr)
    status, _ = run(argv)
    return status


if __name__ == "__main__":
    sys.exit(main())
