"""Command-line front end: counting, listing, converting, exporting, verifying.

Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage
or parse errors. All output is deterministic for fixed arguments.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .compositions import Composition, parse_composition
from .circulant import (
    CirculantDigraph,
    ConnectionSet,
    build_digraph,
    build_graph,
    parse_connection_set,
)
from .bijections import (
    gap_composition,
    prefix_sum_set,
    connected_set_of,
    aperiodic_palindrome_of,
)
from . import counting
from .verify import run_suites

COUNT_FAMILIES = {
    "compositions": counting.count_compositions,
    "prime-compositions": counting.count_prime_compositions,
    "disconnected": counting.count_disconnected_compositions,
    "palindromes": counting.count_palindromes,
    "aperiodic-palindromes": counting.count_aperiodic_palindromes,
}

LIST_FAMILIES = tuple(name.replace("_", "-") for name in counting.FAMILIES)

TABLE_COLUMNS = (
    "n",
    "compositions",
    "prime_compositions",
    "disconnected",
    "palindromes",
    "aperiodic_palindromes",
)


def handle_count(args: argparse.Namespace) -> int:
    print(COUNT_FAMILIES[args.family](args.n))
    return 0


def handle_list(args: argparse.Namespace) -> int:
    if args.limit is not None and args.limit < 1:
        raise ValueError(f"--limit must be >= 1, got {args.limit}")
    stream = counting.iter_family(args.n, args.family.replace("-", "_"))
    items = []
    truncated = False
    for item in stream:
        if args.limit is not None and len(items) == args.limit:
            truncated = True
            break
        items.append(item)
    if args.format == "json":
        payload = [
            list(x.parts) if isinstance(x, Composition) else list(x.elements)
            for x in items
        ]
        print(json.dumps(payload))
    else:
        for item in items:
            print(item)
        if truncated:
            print("…truncated")
    return 0


def handle_convert(args: argparse.Namespace) -> int:
    payload = " ".join(args.payload)
    if args.direction == "to-set":
        print(prefix_sum_set(parse_composition(payload)))
    elif args.direction == "to-composition":
        print(gap_composition(parse_connection_set(payload)))
    elif args.direction == "tau":
        print(connected_set_of(parse_composition(payload)))
    else:
        print(aperiodic_palindrome_of(parse_connection_set(payload)))
    return 0


def handle_graph(args: argparse.Namespace) -> int:
    try:
        members = [int(tok) for tok in args.members.split(",")]
    except ValueError:
        raise ValueError(f"bad member list: {args.members!r}") from None
    connection = ConnectionSet.from_members(args.n, members)
    graph = build_digraph(connection) if args.mode == "digraph" else build_graph(connection)
    if args.format == "dot":
        sys.stdout.write(render_dot(graph))
    else:
        sys.stdout.write(render_edgelist(graph))
    return 0


def handle_table(args: argparse.Namespace) -> int:
    rows = counting.count_table(args.max_n)
    if args.format == "json":
        print(json.dumps([
            {col: getattr(row, col) for col in TABLE_COLUMNS} for row in rows
        ]))
        return 0
    cells = [[col.replace("_", "-") for col in TABLE_COLUMNS]]
    cells += [[str(getattr(row, col)) for col in TABLE_COLUMNS] for row in rows]
    widths = [max(len(line[i]) for line in cells) for i in range(len(TABLE_COLUMNS))]
    for line in cells:
        print("  ".join(cell.rjust(w) for cell, w in zip(line, widths)))
    return 0


def handle_verify(args: argparse.Namespace) -> int:
    results = run_suites(max_n=args.max_n, workers=args.workers)
    for r in results:
        if r.passed:
            line = f"PASS {r.name} ({r.checked} checks)"
        else:
            line = f"FAIL {r.name} ({r.checked} checks): first counterexample: {r.counterexample}"
        if r.detail:
            line += f": {r.detail}" if r.passed else f" [{r.detail}]"
        print(line)
    return 0 if all(r.passed for r in results) else 1


def render_dot(graph: CirculantDigraph) -> str:
    """Graphviz text: vertex lines first, then sorted arc or edge lines."""
    keyword, joiner = ("digraph", "->") if graph.directed else ("graph", "--")
    pairs = graph.arcs() if graph.directed else graph.edges()
    lines = [f"{keyword} {{"]
    lines += [f"  {v};" for v in range(graph.order)]
    lines += [f"  {i} {joiner} {j};" for i, j in pairs]
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_edgelist(graph: CirculantDigraph) -> str:
    """One "i j" line per arc (digraph) or per unordered edge (graph)."""
    pairs = graph.arcs() if graph.directed else graph.edges()
    return "".join(f"{i} {j}\n" for i, j in pairs)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circomp",
        description=(
            "Compositions of n and circulant (di)graphs of order n: exact counts, "
            "streaming enumeration, conversions between the two representations, "
            "graph export, and exhaustive self-verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="print the exact size of a family at order n")
    p.add_argument("family", choices=sorted(COUNT_FAMILIES))
    p.add_argument("n", type=int)
    p.set_defaults(handler=handle_count)

    p = sub.add_parser("list", help="stream the members of a family at order n")
    p.add_argument("family", choices=sorted(LIST_FAMILIES))
    p.add_argument("n", type=int)
    p.add_argument("--limit", type=int, default=None, help="stop after this many members")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=handle_list)

    p = sub.add_parser(
        "convert",
        help="map between composition and connection-set representations",
        description=(
            "Directions: to-set (composition to its prefix-sum connection set), "
            "to-composition (connection set to its gap composition), tau "
            "(aperiodic palindrome to the connection set of a connected circulant "
            "graph), tau-inv (symmetric generating set back to its aperiodic "
            "palindrome). Compositions are written 2,1,2 and connection sets "
            "'5: 0,2,3'."
        ),
    )
    p.add_argument("direction", choices=("to-set", "to-composition", "tau", "tau-inv"))
    p.add_argument("payload", nargs="+", help="composition or connection-set literal")
    p.set_defaults(handler=handle_convert)

    p = sub.add_parser("graph", help="emit a circulant (di)graph as DOT or an edge list")
    p.add_argument("n", type=int)
    p.add_argument("members", help="comma-separated connection set, e.g. 0,1,7")
    p.add_argument("--mode", choices=("digraph", "graph"), default="digraph")
    p.add_argument("--format", choices=("dot", "edgelist"), default="dot")
    p.set_defaults(handler=handle_graph)

    p = sub.add_parser("table", help="print the five-family count table for n = 1..MAX_N")
    p.add_argument("max_n", type=int, metavar="MAX_N")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=handle_table)

    p = sub.add_parser("verify", help="run the exhaustive self-check suites")
    p.add_argument("--max-n", type=int, default=None, help="lower every suite ceiling to this order")
    p.add_argument("--workers", type=int, default=1, help="shard suites across processes")
    p.set_defaults(handler=handle_verify)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
