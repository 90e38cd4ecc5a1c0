"""Subdivisions, vertex-clique incidence graphs and half-squares."""

from __future__ import annotations

from .cliques import CliqueSet, maximal_cliques
from .graph import BipartiteGraph, Graph

VERTEX_SIDE = "vertex"
POINT_SIDE = "point"


def build_subdivision(g: Graph) -> BipartiteGraph:
    """S_G: one point per edge, adjacent to the edge's two endpoints."""
    edges = list(g.edges())
    return BipartiteGraph(g.n, edges, point_labels=[f"e{u}_{v}" for u, v in edges])


def build_vertex_clique_incidence(
    g: Graph, cliques: CliqueSet | None = None, cap: int | None = None
) -> BipartiteGraph:
    """B_G: one point per maximal clique, labeled with the clique's index.

    Pass a precomputed ``cliques`` to avoid enumerating twice. ``cap`` is
    forwarded to :func:`maximal_cliques` and only used when enumerating here.
    """
    if cliques is None:
        cliques = maximal_cliques(g, cap=cap)
    elif cliques.source_size != g.n:
        raise ValueError("clique set was computed for a different graph")
    return BipartiteGraph(g.n, cliques.cliques, point_labels=list(range(len(cliques))))


def half_square(b: BipartiteGraph, side: str = VERTEX_SIDE) -> Graph:
    """B^2 restricted to one color class.

    Two nodes of ``side`` are adjacent iff they have a common neighbor on the
    other side; every neighborhood on the other side expands into a clique.
    """
    if side == VERTEX_SIDE:
        size, groups = b.vertex_count, b.neighborhoods
    elif side == POINT_SIDE:
        size, groups = b.point_count, b.vertex_neighbors()
    else:
        raise ValueError(f"side must be {VERTEX_SIDE!r} or {POINT_SIDE!r}, got {side!r}")
    sets: list[set[int]] = [set() for _ in range(size)]
    for group in groups:
        if len(group) < 2:
            continue
        for x in group:
            sets[x].update(group)
    for x, s in enumerate(sets):
        s.discard(x)
    h = Graph.__new__(Graph)
    h._init(size, sets)
    return h


def is_half_square_of(g: Graph, b: BipartiteGraph) -> bool:
    return b.vertex_count == g.n and half_square(b, VERTEX_SIDE) == g


def drop_small_points(b: BipartiteGraph) -> BipartiteGraph:
    """Remove points of degree at most one; the vertex half-square is unchanged."""
    return b.without_points(w for w, nb in enumerate(b.neighborhoods) if len(nb) <= 1)
