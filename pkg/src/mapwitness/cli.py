"""Command-line front end.

Exit codes: 0 for a Yes verdict (or a clean census / found witness), 1 for No,
2 for usage, input and parameter errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .formats import from_labeled_edgelist, iter_graph6, witness_to_dot, witness_to_text
from .graph import Graph, is_connected
from .oracle import brute_force_witness_search, run_census
from .recognizer import Mode, RecognitionReport, recognize

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2

_MODES = {"map": Mode.MAP_WITNESS, "halfsquare": Mode.HALF_SQUARE, "tree": Mode.TREE}
_EXTENSIONS = {".g6": "graph6", ".graph6": "graph6", ".edges": "edgelist", ".el": "edgelist", ".txt": "edgelist"}


class CliError(Exception):
    pass


def _detect_format(path: str, fmt: str | None) -> str:
    if fmt:
        return fmt
    ext = Path(path).suffix.lower()
    if ext not in _EXTENSIONS:
        raise CliError(f"cannot infer the format of {path!r}; pass --format graph6 or --format edgelist")
    return _EXTENSIONS[ext]


def load_graph(path: str, fmt: str | None = None) -> tuple[Graph, list[str]]:
    """Read one graph; ``-`` is stdin. Returns the graph and a label per vertex."""
    fmt = _detect_format(path, fmt) if path != "-" else (fmt or "edgelist")
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror or exc}") from None
    if fmt == "edgelist":
        return from_labeled_edgelist(text)
    graphs = list(iter_graph6(text))
    if len(graphs) != 1:
        raise CliError(f"{path}: expected exactly one graph6 line, found {len(graphs)}")
    g = graphs[0]
    return g, [str(v) for v in range(g.n)]


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text)
    except OSError as exc:
        raise CliError(f"cannot write {out}: {exc.strerror or exc}") from None


def _run_recognition(args: argparse.Namespace) -> tuple[RecognitionReport, list[str]]:
    g, labels = load_graph(args.graph, args.format)
    mode = _MODES[args.mode]
    girth_min = None if mode is Mode.TREE else args.girth
    return recognize(g, mode, girth_min), labels


def cmd_recognize(args: argparse.Namespace) -> int:
    report, labels = _run_recognition(args)
    _emit(report.summary(timings=not args.no_timings, labels=labels), args.out)
    return EXIT_YES if report.accepted else EXIT_NO


def cmd_witness(args: argparse.Namespace) -> int:
    report, labels = _run_recognition(args)
    if not report.accepted:
        sys.stderr.write(report.summary(timings=False, labels=labels))
        return EXIT_NO
    w = report.witness
    if args.dot:
        _emit(witness_to_dot(w, labels), args.dot)
    if args.out or not args.dot:
        _emit(witness_to_text(w, labels), args.out)
    return EXIT_YES


def _parse_t_values(text: str) -> list[int]:
    try:
        values = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise CliError(f"--t expects comma-separated integers, got {text!r}") from None
    if not values:
        raise CliError("--t needs at least one value")
    return values


def cmd_census(args: argparse.Namespace) -> int:
    report = run_census(
        args.nmax,
        _parse_t_values(args.t),
        oracle_max_n=min(args.oracle_nmax, args.nmax),
        workers=args.workers,
    )
    if args.out:
        _emit(report.to_text(), args.out)
    for g6, what in report.counterexamples:
        print(f"counterexample {g6}: {what}")
    print(f"graphs: {len(report.records)}")
    print(f"{len(report.counterexamples)} counterexamples")
    return EXIT_YES if not report.counterexamples else EXIT_NO


def cmd_oracle(args: argparse.Namespace) -> int:
    g, labels = load_graph(args.graph, args.format)
    if not is_connected(g):
        raise CliError("the witness search needs a connected graph")
    w = brute_force_witness_search(g, args.girth, args.planar)
    if w is None:
        print("no witness exists")
        return EXIT_NO
    print(f"witness found: {w.point_count} points")
    _emit(witness_to_text(w, labels), args.out)
    return EXIT_YES


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mapwitness",
        description="Recognize half-squares and map graphs with large-girth witnesses.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p: argparse.ArgumentParser) -> None:
        p.add_argument("graph", help="input graph file (.g6 or .edges), or - for stdin")
        p.add_argument("--format", choices=("graph6", "edgelist"), help="override extension-based detection")

    def recognition_args(p: argparse.ArgumentParser) -> None:
        graph_args(p)
        p.add_argument("--girth", type=int, default=8, help="even girth bound for the witness, at least 8 (default 8)")
        p.add_argument("--mode", choices=tuple(_MODES), default="map")

    p = sub.add_parser("recognize", help="decide membership and print the verdict")
    recognition_args(p)
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--no-timings", action="store_true", help="omit phase timings for reproducible output")
    p.set_defaults(func=cmd_recognize)

    p = sub.add_parser("witness", help="write the witness of an accepted graph")
    recognition_args(p)
    p.add_argument("--out", help="witness text file (stdout when neither --out nor --dot is given)")
    p.add_argument("--dot", help="also write a DOT drawing here")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("census", help="check the characterizations on all small connected graphs")
    p.add_argument("--nmax", type=int, default=5)
    p.add_argument("--t", default="4", help="comma-separated values of t (girth bound 2t)")
    p.add_argument("--oracle-nmax", type=int, default=5, help="run the exhaustive witness search up to this n")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--out", help="write the per-graph census table here")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("oracle", help="exhaustive witness search on a small graph")
    graph_args(p)
    p.add_argument("--girth", type=int, default=6, help="even girth bound, at least 6 (default 6)")
    p.add_argument("--planar", action="store_true", help="require a planar witness")
    p.add_argument("--out", help="write the witness here instead of stdout")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    # format, girth-parameter and limit errors are all ValueErrors
    try:
        return args.func(args)
    except (CliError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
