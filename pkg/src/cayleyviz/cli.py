"""Command-line interface.

Subcommands cover the whole pipeline: ``render`` draws a graph to SVG,
``analyze`` prints the structural report, ``sync`` answers synchronizability
questions, ``recolor`` searches relabelings, ``cerny`` emits the classic
slow-to-synchronize family, and ``bench`` times the layout kernels.

All input commands read a Cayley table from a file or, with ``-i -``, from
stdin, so commands compose: ``cayleyviz cerny 4 | cayleyviz sync -i - --shortest``.
Report formats are versioned (first line ``format: <name> 1``) and stable.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bench as bench_mod
from .cayley import FILE_EXTENSION, LabeledDigraph, parse, serialize
from .errors import CayleyVizError
from .graph import bunches, cycle_gcd, is_complete, out_degree_profile, scc
from .kernels import BACKEND_NAMES
from .layout import LayoutOptions, find_layout, layout_json_text
from .svg import RenderOptions, render
from .synchro import (
    apply_word,
    cerny,
    brute_force_recolor,
    full_state_set,
    is_synchronizable,
    shortest_sync_word,
    states_of,
    word_from_text,
    word_to_text,
)


class CliError(Exception):
    """Raised for anything that should become a one-line stderr diagnostic."""


class _Parser(argparse.ArgumentParser):
    # Route argparse's own failures through the same one-line error path
    # instead of its default usage dump + exit(2).
    def error(self, message: str) -> None:  # type: ignore[override]
        raise CliError(message)


def _read_graph(path: str, lenient: bool) -> LabeledDigraph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc.strerror or exc}") from exc
    return parse(text, allow_dangling=lenient)


def _write_text(path: Optional[str], text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    try:
        Path(path).write_bytes(text.encode("utf-8"))
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _add_input_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "-i",
        "--input",
        required=True,
        metavar="FILE",
        help=f"Cayley table file ({FILE_EXTENSION}); '-' reads stdin",
    )
    sub.add_argument(
        "--lenient",
        action="store_true",
        help="accept out-of-range successor cells (they carry no edge)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cayleyviz", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True)

    p_render = subs.add_parser("render", help="lay out a graph and write SVG")
    _add_input_flags(p_render)
    p_render.add_argument("-o", "--output", required=True, metavar="FILE.svg")
    p_render.add_argument("--json", metavar="FILE.json", help="also dump layout JSON")
    p_render.add_argument("--spacing", type=float, default=60.0)
    p_render.add_argument("--gap", type=float, default=40.0)
    p_render.add_argument("--vertex-radius", type=float, default=8.0)
    p_render.add_argument("--stripe", type=float, default=6.0)
    p_render.add_argument("--no-legend", action="store_true")

    p_analyze = subs.add_parser("analyze", help="print the structural report")
    _add_input_flags(p_analyze)

    p_sync = subs.add_parser("sync", help="synchronizability report")
    _add_input_flags(p_sync)
    p_sync.add_argument(
        "--shortest",
        action="store_true",
        help="also compute the shortest synchronizing word",
    )
    p_sync.add_argument(
        "--apply",
        metavar="WORD",
        help="report the image of the full state set under WORD",
    )

    p_recolor = subs.add_parser(
        "recolor", help="search edge relabelings for a synchronizing one"
    )
    _add_input_flags(p_recolor)
    p_recolor.add_argument(
        "--max",
        type=int,
        default=12,
        dest="max_vertices",
        help="refuse graphs larger than this (default 12)",
    )

    p_cerny = subs.add_parser("cerny", help="emit the n-state slow automaton")
    p_cerny.add_argument("n", type=int)
    p_cerny.add_argument("-o", "--output", metavar="FILE", help="default stdout")

    p_bench = subs.add_parser("bench", help="time the layout pipeline")
    p_bench.add_argument(
        "--sizes",
        default="1000,10000,100000",
        help="comma-separated vertex counts (default 1000,10000,100000)",
    )
    p_bench.add_argument("--seed", type=int, default=0)
    p_bench.add_argument(
        "--impl",
        default="auto",
        choices=list(BACKEND_NAMES) + ["both"],
        help="kernel backend to time ('both' compares pure and fast)",
    )

    return parser


def _cmd_render(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.lenient)
    opts = LayoutOptions(
        vertex_radius=args.vertex_radius,
        spacing=args.spacing,
        scc_gap=args.gap,
        stripe_spacing=args.stripe,
    )
    layout, edges = find_layout(g, opts)
    svg = render(layout, edges, RenderOptions(show_legend=not args.no_legend))
    _write_text(args.output, svg)
    if args.json:
        _write_text(args.json, layout_json_text(layout, edges))
    return 0


def _analyze_report(g: LabeledDigraph) -> str:
    decomposition = scc(g)
    report = bunches(g)
    lines = [
        "format: analyze 1",
        f"vertices: {g.num_vertices}",
        f"labels: {g.num_labels}",
        f"edges: {g.num_edges}",
        f"complete: {'yes' if is_complete(g) else 'no'}",
        f"dangling-cells: {g.dangling_cells}",
        "out-degrees: " + " ".join(str(d) for d in out_degree_profile(g).values()),
        f"scc-count: {len(decomposition.components)}",
    ]
    for idx, component in enumerate(decomposition.components):
        gcd = cycle_gcd(g, component)
        lines.append(
            f"scc {idx}: size={len(component)}"
            f" gcd={'none' if gcd is None else gcd}"
            f" vertices={' '.join(str(v) for v in component)}"
        )
    condensation = sorted(decomposition.condensation_edges)
    lines.append(
        "condensation-edges: "
        + (" ".join(f"{a}->{b}" for a, b in condensation) if condensation else "none")
    )
    bunch_pairs = sorted(
        (v, report.bunch_target[v]) for v in report.bunch_vertices
    )
    lines.append(
        "bunches: "
        + (" ".join(f"{v}->{t}" for v, t in bunch_pairs) if bunch_pairs else "none")
    )
    incoming = sorted(
        (v, c) for v, c in report.incoming_bunch_count.items() if c > 0
    )
    lines.append(
        "incoming-bunches: "
        + (" ".join(f"{v}={c}" for v, c in incoming) if incoming else "none")
    )
    return "\n".join(lines) + "\n"


def _cmd_analyze(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.lenient)
    sys.stdout.write(_analyze_report(g))
    return 0


def _cmd_sync(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.lenient)
    lines = ["format: sync 1"]
    ok = is_synchronizable(g)
    lines.append(f"synchronizable: {'yes' if ok else 'no'}")
    if args.shortest:
        report = shortest_sync_word(g)
        if report.witness is None:
            lines.append("shortest-length: none")
            lines.append("witness: none")
        else:
            lines.append(f"shortest-length: {report.shortest_length}")
            lines.append(f"witness: {word_to_text(report.witness, g.num_labels)}")
    if args.apply is not None:
        word = word_from_text(args.apply, g.num_labels)
        image = apply_word(g, full_state_set(g), word)
        members = states_of(image)
        lines.append("image: " + " ".join(str(v) for v in members))
        lines.append(f"image-size: {len(members)}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def _cmd_recolor(args: argparse.Namespace) -> int:
    g = _read_graph(args.input, args.lenient)
    result = brute_force_recolor(g, max_vertices=args.max_vertices)
    if result is None:
        sys.stdout.write("recoloring: none\n")
    else:
        sys.stdout.write("recoloring:\n")
        sys.stdout.write(serialize(result))
    return 0


def _cmd_cerny(args: argparse.Namespace) -> int:
    if args.n < 2:
        raise CliError("cerny: n must be at least 2")
    _write_text(args.output, serialize(cerny(args.n)))
    return 0


def _cmd_bench(args: argparse.Namespace) -> int:
    try:
        sizes = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    except ValueError as exc:
        raise CliError(f"bench: bad --sizes value {args.sizes!r}") from exc
    if not sizes or any(s <= 0 for s in sizes):
        raise CliError("bench: sizes must be positive integers")
    rows = bench_mod.run(sizes, args.seed, impl=args.impl)
    sys.stdout.write(bench_mod.format_rows(rows))
    return 0


_COMMANDS = {
    "render": _cmd_render,
    "analyze": _cmd_analyze,
    "sync": _cmd_sync,
    "recolor": _cmd_recolor,
    "cerny": _cmd_cerny,
    "bench": _cmd_bench,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except (CliError, CayleyVizError, ValueError, RuntimeError) as exc:
        print(f"cayleyviz: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
