"""Top-level recognizers for girth-constrained half-squares and map graphs."""

from __future__ import annotations

import enum
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .cliques import MAP_GRAPH_CLIQUE_FACTOR, CapExceeded, maximal_cliques
from .detect import (
    Obstruction,
    ObstructionKind,
    find_diamond,
    find_short_induced_cycle,
    validate_obstruction,
)
from .graph import INFINITE, BipartiteGraph, Graph, find_cycle_shorter_than, shortest_cycle
from .incidence import build_vertex_clique_incidence, is_half_square_of
from .planarity import is_planar


class Mode(enum.Enum):
    HALF_SQUARE = "HalfSquareGirth"
    MAP_WITNESS = "MapWitnessGirth"
    TREE = "TreeWitness"


class Verdict(enum.Enum):
    YES = "Yes"
    NO = "No"


class GirthParameterError(ValueError):
    pass


class OddGirthParameter(GirthParameterError):
    pass


class GirthParameterTooSmall(GirthParameterError):
    pass


class SoundnessError(RuntimeError):
    """A report failed its own re-validation; always a bug."""


@dataclass(frozen=True)
class RecognitionReport:
    verdict: Verdict
    mode: Mode
    girth_parameter: float
    witness: BipartiteGraph | None = None
    obstruction: Obstruction | None = None
    # B_G whenever it was built; BG_* obstructions refer to its node ids
    incidence: BipartiteGraph | None = field(default=None, repr=False)
    stats: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def accepted(self) -> bool:
        return self.verdict is Verdict.YES

    def summary(self, timings: bool = True, labels: Sequence[str] | None = None) -> str:
        """Line-oriented report; only the optional ``timings:`` block varies between runs."""
        lines = []
        if self.accepted:
            w = self.witness
            lines.append(f"Yes: witness with {w.point_count} points")
        else:
            lines.append(f"No: {self.obstruction.describe(labels)}")
        param = "inf" if self.girth_parameter == INFINITE else str(int(self.girth_parameter))
        lines.append(f"mode: {self.mode.value}")
        lines.append(f"girth parameter: {param}")
        for key in ("vertices", "edges", "cliques", "bg_points", "bg_edges"):
            if key in self.stats:
                lines.append(f"{key.replace('_', ' ')}: {self.stats[key]}")
        if self.obstruction is not None and self.obstruction.vertices:
            lines.append(f"certificate: {' '.join(self.obstruction.node_names(labels))}")
        if timings and self.stats.get("timings"):
            lines.append("timings:")
            for phase, secs in self.stats["timings"].items():
                lines.append(f"  {phase}: {secs:.4f}s")
        return "\n".join(lines) + "\n"


def _check_girth_parameter(girth_min: int) -> int:
    if girth_min % 2:
        raise OddGirthParameter(f"girth parameter must be even, got {girth_min}")
    if girth_min < 8:
        raise GirthParameterTooSmall(
            f"girth parameter must be at least 8, got {girth_min}; use the brute-force oracle for girth 6"
        )
    return girth_min // 2


class _Timer:
    def __init__(self) -> None:
        self.phases: dict[str, float] = {}

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        start = time.perf_counter()
        try:
            yield
        finally:
            self.phases[name] = self.phases.get(name, 0.0) + time.perf_counter() - start


def _recognize_girth(g: Graph, girth_min: int, mode: Mode) -> RecognitionReport:
    t = _check_girth_parameter(girth_min)
    timer = _Timer()
    stats: dict = {"vertices": g.n, "edges": g.m, "timings": timer.phases}

    def reject(ob: Obstruction, b: BipartiteGraph | None = None) -> RecognitionReport:
        return _finish(RecognitionReport(Verdict.NO, mode, girth_min, None, ob, b, stats), g, timer)

    with timer.phase("diamond"):
        ob = find_diamond(g)
    if ob is not None:
        return reject(ob)
    if t >= 5:
        with timer.phase("c4"):
            ob = find_short_induced_cycle(g, 4)
        if ob is not None:
            return reject(ob)

    if mode is Mode.MAP_WITNESS:
        cap = MAP_GRAPH_CLIQUE_FACTOR * g.n
    else:
        # diamond-free: each edge lies in exactly one maximal clique
        cap = g.m + sum(1 for v in range(g.n) if g.degree(v) == 0)
    with timer.phase("cliques"):
        try:
            cliques = maximal_cliques(g, cap=cap)
        except CapExceeded as exc:
            if mode is not Mode.MAP_WITNESS:
                raise SoundnessError("diamond-free graph exceeded the per-edge clique bound") from exc
            note = f"more than {cap} maximal cliques; not a map graph"
            return reject(Obstruction(ObstructionKind.CLIQUE_CAP, note=note))
    stats["cliques"] = len(cliques)
    with timer.phase("incidence"):
        b = build_vertex_clique_incidence(g, cliques)
    stats["bg_points"] = b.point_count
    stats["bg_edges"] = b.edge_count

    with timer.phase("girth"):
        cycle = find_cycle_shorter_than(b, girth_min)
    if cycle is not None:
        ob = None
        if t - 1 >= 4:
            with timer.phase("induced-cycle"):
                ob = find_short_induced_cycle(g, t - 1)
        if ob is None:
            ob = Obstruction(ObstructionKind.BG_SHORT_CYCLE, tuple(cycle), len(cycle))
        return reject(ob, b)

    if mode is Mode.MAP_WITNESS:
        with timer.phase("planarity"):
            pr = is_planar(b, certificate=True)
        if not pr.planar:
            edges = pr.obstruction or ()
            nodes = tuple(sorted({x for e in edges for x in e}))
            return reject(Obstruction(ObstructionKind.BG_NONPLANAR, nodes, edges=edges), b)

    return _finish(RecognitionReport(Verdict.YES, mode, girth_min, b, None, b, stats), g, timer)


def _finish(report: RecognitionReport, g: Graph, timer: _Timer) -> RecognitionReport:
    with timer.phase("validate"):
        problem = report_problem(report, g)
    if problem:
        raise SoundnessError(problem)
    return report


def report_problem(report: RecognitionReport, g: Graph) -> str | None:
    """Re-validate a report against its input; ``None`` when it checks out."""
    if report.accepted:
        w = report.witness
        if w is None:
            return "accepted without a witness"
        if not is_half_square_of(g, w):
            return "witness half-square differs from the input"
        if report.girth_parameter == INFINITE:
            if shortest_cycle(w) is not None:
                return "tree witness has a cycle"
        elif find_cycle_shorter_than(w, int(report.girth_parameter)) is not None:
            return "witness girth below the parameter"
        if report.mode is Mode.MAP_WITNESS and not is_planar(w).planar:
            return "map witness is not planar"
        return None
    ob = report.obstruction
    if ob is None:
        return "rejected without an obstruction"
    finite = report.girth_parameter != INFINITE
    if ob.kind in (ObstructionKind.BG_SHORT_CYCLE, ObstructionKind.BG_NONPLANAR):
        if report.incidence is None or report.incidence != build_vertex_clique_incidence(g):
            return "B_G certificate does not refer to B_G"
        if finite and ob.kind is ObstructionKind.BG_SHORT_CYCLE and ob.cycle_length >= report.girth_parameter:
            return "B_G cycle is not shorter than the parameter"
    if finite and ob.kind is ObstructionKind.INDUCED_CYCLE and 2 * ob.cycle_length >= report.girth_parameter:
        return "induced cycle too long to rule out the girth bound"
    if ob.kind is ObstructionKind.BG_NONPLANAR and report.mode is not Mode.MAP_WITNESS:
        return "nonplanarity only disqualifies map witnesses"
    if not validate_obstruction(ob, g, report.incidence):
        return f"obstruction does not verify: {ob}"
    return None


def recognize_half_square_girth(g: Graph, girth_min: int) -> RecognitionReport:
    """Is ``g`` the half-square of a bipartite graph with girth >= ``girth_min``?

    Accepts exactly the diamond-free graphs without induced cycles of length
    4..girth_min/2-1; the witness is then B_G itself.
    """
    return _recognize_girth(g, girth_min, Mode.HALF_SQUARE)


def recognize_map_witness_girth(g: Graph, girth_min: int) -> RecognitionReport:
    """Is ``g`` a map graph with a witness of girth >= ``girth_min``?

    Same pipeline as :func:`recognize_half_square_girth` plus planarity of
    B_G, and an early abort once there are more than 27n maximal cliques.
    """
    return _recognize_girth(g, girth_min, Mode.MAP_WITNESS)


def recognize_tree_witness(g: Graph) -> RecognitionReport:
    """Does ``g`` have a tree witness, i.e. is B_G acyclic?"""
    timer = _Timer()
    stats: dict = {"vertices": g.n, "edges": g.m, "timings": timer.phases}
    b = None
    cycle = None
    with timer.phase("cliques"):
        try:
            # an acyclic B_G has fewer points than vertices
            cliques = maximal_cliques(g, cap=max(g.n, 1))
        except CapExceeded:
            cliques = None
    if cliques is not None:
        stats["cliques"] = len(cliques)
        with timer.phase("incidence"):
            b = build_vertex_clique_incidence(g, cliques)
        stats["bg_points"] = b.point_count
        stats["bg_edges"] = b.edge_count
        with timer.phase("girth"):
            cycle = shortest_cycle(b)
        if cycle is None:
            report = RecognitionReport(Verdict.YES, Mode.TREE, INFINITE, b, None, b, stats)
            return _finish(report, g, timer)
    with timer.phase("obstruction"):
        ob = find_diamond(g)
        if ob is None and g.n >= 4:
            ob = find_short_induced_cycle(g, g.n)
    if ob is None:
        if b is None:
            b = build_vertex_clique_incidence(g)
            cycle = shortest_cycle(b)
        ob = Obstruction(ObstructionKind.BG_SHORT_CYCLE, tuple(cycle), len(cycle))
    return _finish(RecognitionReport(Verdict.NO, Mode.TREE, INFINITE, None, ob, b, stats), g, timer)


def recognize(g: Graph, mode: Mode | str, girth_min: int | None = None) -> RecognitionReport:
    mode = Mode(mode) if not isinstance(mode, Mode) else mode
    if mode is Mode.TREE:
        return recognize_tree_witness(g)
    if girth_min is None:
        raise GirthParameterError("a girth parameter is required for this mode")
    return _recognize_girth(g, girth_min, mode)
