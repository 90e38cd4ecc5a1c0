"""Forbidden induced subgraphs: diamonds, short induced cycles, block graphs."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Sequence

from .cliques import MAP_GRAPH_CLIQUE_FACTOR, CapExceeded, maximal_cliques
from .graph import BipartiteGraph, Graph, induced_subgraph
from .planarity import is_kuratowski_subdivision, is_planar


class ObstructionKind(enum.Enum):
    DIAMOND = "Diamond"
    INDUCED_CYCLE = "InducedCycle"
    BG_SHORT_CYCLE = "BGShortCycle"
    BG_NONPLANAR = "BGNonplanar"
    CLIQUE_CAP = "CliqueCapExceeded"


@dataclass(frozen=True)
class Obstruction:
    """Certificate that a graph is rejected.

    ``vertices`` are ids of the input graph for ``DIAMOND`` and
    ``INDUCED_CYCLE``. For the two ``BG_*`` kinds they are node ids of the
    flattened incidence graph (points follow the vertices), and a nonplanarity
    certificate lists its Kuratowski subdivision in ``edges``.
    """

    kind: ObstructionKind
    vertices: tuple[int, ...] = ()
    cycle_length: int | None = None
    edges: tuple[tuple[int, int], ...] = ()
    note: str = field(default="", compare=False)

    def describe(self, labels: Sequence[str] | None = None) -> str:
        names = self.node_names(labels)
        if self.kind is ObstructionKind.DIAMOND:
            return f"induced diamond on {' '.join(names)}"
        if self.kind is ObstructionKind.INDUCED_CYCLE:
            return f"induced C{self.cycle_length} on {' '.join(names)}"
        if self.kind is ObstructionKind.BG_SHORT_CYCLE:
            return f"B_G has a cycle of length {self.cycle_length}"
        if self.kind is ObstructionKind.BG_NONPLANAR:
            return "B_G nonplanar"
        return self.note or "too many maximal cliques"

    def node_names(self, labels: Sequence[str] | None = None) -> list[str]:
        """Printable names for ``vertices``; B_G points beyond the vertices become ``q<i>``."""
        if labels is None:
            return [str(v) for v in self.vertices]
        nv = len(labels)
        return [labels[v] if v < nv else f"q{v - nv}" for v in self.vertices]


def find_diamond(g: Graph) -> Obstruction | None:
    """An induced K4-e, searched edge by edge in lexicographic order.

    For an edge uv, any two nonadjacent common neighbors x, y give the diamond
    {u, v, x, y}. The first hit is returned, so the result is deterministic.
    """
    adj = g.adjacency
    sets = [g.neighbor_set(v) for v in range(g.n)]
    for u in range(g.n):
        su = sets[u]
        for v in adj[u]:
            if v < u:
                continue
            common = sorted(su & sets[v])
            for i, x in enumerate(common):
                sx = sets[x]
                for y in common[i + 1 :]:
                    if y not in sx:
                        return Obstruction(ObstructionKind.DIAMOND, (u, v, x, y))
    return None


def is_diamond_free(g: Graph) -> bool:
    return find_diamond(g) is None


def _find_induced_c4(g: Graph) -> Obstruction | None:
    # a, c non-adjacent with two non-adjacent common neighbors b, d
    adj = g.adjacency
    sets = [g.neighbor_set(v) for v in range(g.n)]
    for a in range(g.n):
        na = sets[a]
        common: dict[int, list[int]] = {}
        for b in adj[a]:
            for c in adj[b]:
                if c > a and c not in na:
                    common.setdefault(c, []).append(b)
        for c in sorted(common):
            mids = common[c]
            for i, b in enumerate(mids):
                nb = sets[b]
                for d in mids[i + 1 :]:
                    if d not in nb:
                        return Obstruction(ObstructionKind.INDUCED_CYCLE, (a, b, c, d), 4)
    return None


def find_short_induced_cycle(g: Graph, max_len: int) -> Obstruction | None:
    """A shortest induced cycle of length between 4 and ``max_len``.

    Every hole has a vertex b with cycle neighbors a, c; removing b and the rest
    of N(b) leaves the hole as an a-c path, and conversely any shortest a-c path
    there closes through b into a hole. So BFS from each a over
    ``G - (N[b] - {a})`` for each induced path a-b-c finds the shortest hole.
    """
    if max_len < 4:
        raise ValueError("max_len must be at least 4")
    c4 = _find_induced_c4(g)
    if c4 is not None or max_len == 4:
        return c4
    adj = g.adjacency
    best: list[int] | None = None
    limit = max_len - 2  # path length a..c inside the hole
    for b in range(g.n):
        nb = g.neighbor_set(b)
        if len(nb) < 2:
            continue
        for a in adj[b]:
            targets = [c for c in adj[b] if c > a and c not in g.neighbor_set(a)]
            if not targets:
                continue
            parent = {a: -1}
            dist = {a: 0}
            queue = deque([a])
            hit = None
            cap = limit if best is None else min(limit, len(best) - 3)
            tset = set(targets)
            while queue and hit is None:
                u = queue.popleft()
                if dist[u] >= cap:
                    break
                for v in adj[u]:
                    if v in dist or v == b or (v in nb and v not in tset):
                        continue
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    if v in tset:
                        hit = v
                        break
                    queue.append(v)
            if hit is None:
                continue
            path = [hit]
            while parent[path[-1]] != -1:
                path.append(parent[path[-1]])
            cycle = [b] + path[::-1]
            if best is None or len(cycle) < len(best):
                best = cycle
                if len(best) == 4:
                    return Obstruction(ObstructionKind.INDUCED_CYCLE, tuple(best), 4)
    if best is None:
        return None
    return Obstruction(ObstructionKind.INDUCED_CYCLE, tuple(best), len(best))


def biconnected_components(g: Graph) -> list[list[int]]:
    """Vertex sets of the blocks with at least one edge (iterative Hopcroft-Tarjan)."""
    n = g.n
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    blocks = []
    timer = 0
    for root in range(n):
        if disc[root] != -1 or not adj[root]:
            continue
        disc[root] = low[root] = timer
        timer += 1
        estack: list[tuple[int, int]] = []
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if disc[v] == -1:
                    disc[v] = low[v] = timer
                    timer += 1
                    estack.append((u, v))
                    stack.append((v, u, iter(adj[v])))
                    advanced = True
                    break
                if v != parent and disc[v] < disc[u]:
                    estack.append((u, v))
                    low[u] = min(low[u], disc[v])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[u])
            if low[u] >= disc[parent]:
                block = set()
                while True:
                    e = estack.pop()
                    block.update(e)
                    if e == (parent, u):
                        break
                blocks.append(sorted(block))
    return blocks


def is_block_graph(g: Graph) -> bool:
    """True iff every biconnected component induces a complete graph."""
    for block in biconnected_components(g):
        k = len(block)
        members = set(block)
        for v in block:
            if len(g.neighbor_set(v) & members) != k - 1:
                return False
    return True


def _is_cycle_order(g: Graph, order: tuple[int, ...]) -> bool:
    k = len(order)
    return len(set(order)) == k and all(g.has_edge(order[i], order[(i + 1) % k]) for i in range(k))


def validate_obstruction(ob: Obstruction, g: Graph, witness: BipartiteGraph | None = None) -> bool:
    """Re-check a certificate against the graph it was produced for.

    ``witness`` is the incidence graph the ``BG_*`` kinds refer to.
    """
    if ob.kind is ObstructionKind.DIAMOND:
        if len(set(ob.vertices)) != 4 or any(not 0 <= v < g.n for v in ob.vertices):
            return False
        return induced_subgraph(g, ob.vertices).m == 5
    if ob.kind is ObstructionKind.INDUCED_CYCLE:
        k = len(ob.vertices)
        if k < 4 or ob.cycle_length != k or any(not 0 <= v < g.n for v in ob.vertices):
            return False
        return _is_cycle_order(g, ob.vertices) and induced_subgraph(g, ob.vertices).m == k
    if ob.kind is ObstructionKind.CLIQUE_CAP:
        try:
            maximal_cliques(g, cap=MAP_GRAPH_CLIQUE_FACTOR * g.n)
        except CapExceeded:
            return True
        return False
    if witness is None:
        return False
    flat = witness.to_graph()
    if ob.kind is ObstructionKind.BG_SHORT_CYCLE:
        k = len(ob.vertices)
        if k < 3 or ob.cycle_length != k or any(not 0 <= v < flat.n for v in ob.vertices):
            return False
        return _is_cycle_order(flat, ob.vertices)
    if ob.kind is ObstructionKind.BG_NONPLANAR:
        if ob.edges:
            if any(not flat.has_edge(u, v) for u, v in ob.edges):
                return False
            return is_kuratowski_subdivision(ob.edges)
        return not is_planar(flat).planar
    return False
