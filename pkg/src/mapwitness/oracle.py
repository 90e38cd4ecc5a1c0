"""Brute-force cross-checks: small-graph census and exhaustive witness search.

Witness search reduction
------------------------
A bipartite graph B = (V, W, E) of girth >= 6 has no 4-cycle, so two points
share at most one vertex. Every point neighborhood is a clique of the
half-square, and points of degree <= 1 contribute no edges and can be removed
without changing the half-square (or creating cycles). What remains is a
family of cliques of size >= 2 in which every edge of the half-square lies in
exactly one member: an edge clique partition. Conversely every edge clique
partition gives such a bipartite graph. Deciding whether some witness of
girth >= g (and optionally planar) exists therefore amounts to trying every
edge clique partition, which is what :func:`brute_force_witness_search` does.

The search is independent of the recognizers: it never builds B_G, and its
planarity filter is networkx's implementation rather than ours. Anything it
returns is re-validated through the main library before being handed out.
"""

from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterator

import networkx as nx

from .detect import find_diamond, find_short_induced_cycle, is_block_graph
from .formats import from_graph6, to_graph6
from .graph import INFINITE, BipartiteGraph, Graph, components, find_cycle_shorter_than, girth
from .incidence import build_vertex_clique_incidence, is_half_square_of
from .planarity import is_planar
from .recognizer import (
    recognize_half_square_girth,
    recognize_map_witness_girth,
    recognize_tree_witness,
)

MAX_ENUMERATION_N = 8
MAX_CENSUS_N = 7
MAX_SEARCH_N = 9
MAX_BRUTE_PLANARITY_N = 10


class LimitExceeded(ValueError):
    """Input is beyond what the exhaustive machinery is allowed to attempt."""


# -- canonical forms and enumeration -----------------------------------------


def _refine(g: Graph) -> list[int]:
    """Isomorphism-invariant vertex colors by iterated neighbor-color refinement."""
    colors = [g.degree(v) for v in range(g.n)]
    classes = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in g.neighbors(v)))) for v in range(g.n)]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == classes:
            return colors
        classes = len(rank)


def _code(g: Graph, pos: list[int]) -> int:
    # bit k of the graph6 upper triangle, first bit most significant
    total = g.n * (g.n - 1) // 2
    code = 0
    for u, v in g.edges():
        i, j = pos[u], pos[v]
        if i > j:
            i, j = j, i
        code |= 1 << (total - 1 - (j * (j - 1) // 2 + i))
    return code


def canonical_form(g: Graph) -> tuple[int, tuple[int, ...]]:
    """Smallest adjacency code over all vertex orders compatible with refinement.

    Returns ``(code, order)`` where ``order[i]`` is the vertex placed at
    position ``i``. Equal codes (for equal ``n``) mean isomorphic graphs.
    """
    colors = _refine(g)
    cells = [[v for v in range(g.n) if colors[v] == c] for c in sorted(set(colors))]
    best_code = None
    best_order: tuple[int, ...] = ()
    pos = [0] * g.n
    for parts in itertools.product(*(itertools.permutations(cell) for cell in cells)):
        order = tuple(v for part in parts for v in part)
        for i, v in enumerate(order):
            pos[v] = i
        code = _code(g, pos)
        if best_code is None or code < best_code:
            best_code, best_order = code, order
    return (best_code or 0), best_order


def canonical_graph(g: Graph) -> Graph:
    _, order = canonical_form(g)
    pos = [0] * g.n
    for i, v in enumerate(order):
        pos[v] = i
    return g.relabel(pos)


def _labeled_connected(n: int) -> Iterator[Graph]:
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for mask in range(1 << len(pairs)):
        g = Graph(n, (p for k, p in enumerate(pairs) if mask >> k & 1))
        if len(components(g)) == 1:
            yield g


def enumerate_connected_graphs(n: int, canonical: bool = True) -> Iterator[Graph]:
    """Connected simple graphs on ``n`` vertices.

    With ``canonical=True`` (default) one canonical representative per
    isomorphism class, grown vertex by vertex: deleting a leaf of a spanning
    tree keeps a graph connected, so every connected graph extends a connected
    graph on one vertex fewer. Without it, every labeled connected graph.
    """
    if n > MAX_ENUMERATION_N:
        raise LimitExceeded(f"enumeration is limited to n <= {MAX_ENUMERATION_N}, got {n}")
    if n < 1:
        return iter(())
    if not canonical:
        return _labeled_connected(n)
    level = {0: Graph(1)}
    for k in range(2, n + 1):
        nxt: dict[int, Graph] = {}
        for base in level.values():
            edges = list(base.edges())
            for mask in range(1, 1 << (k - 1)):
                new = edges + [(v, k - 1) for v in range(k - 1) if mask >> v & 1]
                h = Graph(k, new)
                code, _ = canonical_form(h)
                if code not in nxt:
                    nxt[code] = canonical_graph(h)
        level = nxt
    return iter([level[c] for c in sorted(level)])


# -- brute-force planarity ---------------------------------------------------


def _has_kuratowski_subgraph(nodes: list[int], adj: dict[int, set[int]]) -> bool:
    deg4 = [v for v in nodes if len(adj[v]) >= 4]
    for combo in itertools.combinations(deg4, 5):
        if all(b in adj[a] for a, b in itertools.combinations(combo, 2)):
            return True
    deg3 = [v for v in nodes if len(adj[v]) >= 3]
    for combo in itertools.combinations(deg3, 6):
        first, rest = combo[0], combo[1:]
        for pair in itertools.combinations(rest, 2):
            left = (first, *pair)
            right = [v for v in rest if v not in pair]
            if all(b in adj[a] for a in left for b in right):
                return True
    return False


def brute_force_is_planar(g: Graph | BipartiteGraph) -> bool:
    """Planarity by exhaustive minor search for K5 and K3,3.

    Every quotient by a partition into connected parts is reached by repeated
    edge contraction; each quotient is scanned for K5 or K3,3 as a subgraph.
    Exponential; meant for at most ``MAX_BRUTE_PLANARITY_N`` nodes.
    """
    if isinstance(g, BipartiteGraph):
        g = g.to_graph()
    if g.n > MAX_BRUTE_PLANARITY_N:
        raise LimitExceeded(f"brute-force planarity is limited to {MAX_BRUTE_PLANARITY_N} nodes")
    start = frozenset(g.edges())
    seen = {start}
    todo = [start]
    while todo:
        edges = todo.pop()
        adj: dict[int, set[int]] = {}
        for a, b in edges:
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        if len(adj) < 5 or len(edges) < 9:
            continue
        nodes = sorted(adj)
        if _has_kuratowski_subgraph(nodes, adj):
            return False
        for a, b in edges:
            # contract b into a
            merged = set()
            for x, y in edges:
                x = a if x == b else x
                y = a if y == b else y
                if x != y:
                    merged.add((x, y) if x < y else (y, x))
            state = frozenset(merged)
            if state not in seen:
                seen.add(state)
                todo.append(state)
    return True


# -- witness search ----------------------------------------------------------


def _check_search_args(g: Graph, girth_min: int) -> None:
    if girth_min < 6 or girth_min % 2:
        raise ValueError(f"girth parameter must be an even integer >= 6, got {girth_min}")
    if g.n > MAX_SEARCH_N:
        raise LimitExceeded(f"witness search is limited to n <= {MAX_SEARCH_N}, got {g.n}")
    if len(components(g)) > 1:
        raise ValueError("witness search needs a connected graph")


def clique_partitions(g: Graph) -> Iterator[list[tuple[int, ...]]]:
    """Every partition of ``E(g)`` into cliques, each exactly once.

    The lexicographically smallest uncovered edge is always covered next, by
    each clique containing it whose edges are all uncovered.
    """
    yield from _partitions(g, lambda q, pts: True)


def _partitions(g: Graph, admissible: Callable[[tuple[int, ...], list], bool]):
    covered: set[tuple[int, int]] = set()
    edges = list(g.edges())
    points: list[tuple[int, ...]] = []

    def free(x: int, y: int) -> bool:
        return ((x, y) if x < y else (y, x)) not in covered

    def cliques_through(u: int, v: int) -> list[tuple[int, ...]]:
        cand = [w for w in sorted(g.neighbor_set(u) & g.neighbor_set(v)) if free(u, w) and free(v, w)]
        out = []

        def grow(members: list[int], start: int) -> None:
            out.append(tuple(sorted(members)))
            for i in range(start, len(cand)):
                w = cand[i]
                if all(g.has_edge(w, x) and free(w, x) for x in members[2:]):
                    members.append(w)
                    grow(members, i + 1)
                    members.pop()

        grow([u, v], 0)
        out.sort(key=lambda q: (-len(q), q))
        return out

    def rec(idx: int):
        while idx < len(edges) and edges[idx] in covered:
            idx += 1
        if idx == len(edges):
            yield list(points)
            return
        u, v = edges[idx]
        for q in cliques_through(u, v):
            if not admissible(q, points):
                continue
            pairs = [(a, b) for a, b in itertools.combinations(q, 2)]
            covered.update(pairs)
            points.append(q)
            yield from rec(idx + 1)
            points.pop()
            covered.difference_update(pairs)

    yield from rec(0)


def _short_cycle_through_new_point(q: tuple[int, ...], points: list[tuple[int, ...]], n: int, girth_min: int) -> bool:
    """Would adding a point adjacent to ``q`` close a cycle shorter than ``girth_min``?

    Such a cycle runs through the new point, so it exists iff two members of
    ``q`` are within distance ``girth_min - 3`` in the current bipartite graph.
    """
    vertex_points: list[list[int]] = [[] for _ in range(n)]
    for w, nb in enumerate(points):
        for v in nb:
            vertex_points[v].append(w)
    limit = girth_min - 3
    qset = set(q)
    for s in q:
        dist = {("v", s): 0}
        queue = deque([("v", s)])
        while queue:
            node = queue.popleft()
            d = dist[node]
            if d >= limit:
                continue
            kind, x = node
            nbrs = [("p", w) for w in vertex_points[x]] if kind == "v" else [("v", y) for y in points[x]]
            for nb in nbrs:
                if nb in dist:
                    continue
                dist[nb] = d + 1
                if nb[0] == "v" and nb[1] in qset:
                    return True
                queue.append(nb)
    return False


def _nx_planar(n: int, points: list[tuple[int, ...]]) -> bool:
    h = nx.Graph()
    h.add_nodes_from(range(n))
    for w, nb in enumerate(points):
        h.add_edges_from((v, ("w", w)) for v in nb)
    return nx.check_planarity(h)[0]


def brute_force_witness_search(g: Graph, girth_min: int, require_planar: bool) -> BipartiteGraph | None:
    """Some bipartite B with half-square ``g`` and girth >= ``girth_min``, or ``None``.

    Exhaustive over edge clique partitions (see the module docstring). With
    ``require_planar`` the witness must also be planar.

    Raises:
        LimitExceeded: ``g`` has more than ``MAX_SEARCH_N`` vertices.
    """
    _check_search_args(g, girth_min)
    n = g.n

    def admissible(q, points):
        if _short_cycle_through_new_point(q, points, n, girth_min):
            return False
        # planarity is inherited by subgraphs, so a nonplanar partial witness is dead
        return not require_planar or _nx_planar(n, points + [q])

    for points in _partitions(g, admissible):
        b = BipartiteGraph(n, points)
        _revalidate(g, b, girth_min, require_planar)
        return b
    return None


def _revalidate(g: Graph, b: BipartiteGraph, girth_min: int, require_planar: bool) -> None:
    if not is_half_square_of(g, b):
        raise AssertionError("witness search produced a wrong half-square")
    if find_cycle_shorter_than(b, girth_min) is not None:
        raise AssertionError("witness search produced a witness of too small girth")
    if require_planar:
        if not is_planar(b).planar:
            raise AssertionError("witness search produced a nonplanar witness")
        if g.n >= 3 and b.point_count > 3 * g.n - 6:
            raise AssertionError(f"planar witness with {b.point_count} points exceeds 3n-6")


# -- census ------------------------------------------------------------------

PER_T_COLUMNS = ("ii", "iii", "hs", "map", "map-def", "oracle-map", "oracle-hs")
TREE_COLUMNS = ("tree", "block", "bg-acyclic")


@dataclass
class CensusRecord:
    graph6: str
    n: int
    per_t: dict[int, dict[str, bool | None]]
    tree: dict[str, bool]

    def vector(self) -> str:
        def bit(x):
            return "-" if x is None else ("1" if x else "0")

        parts = [f"t{t}=" + "".join(bit(cols[c]) for c in PER_T_COLUMNS) for t, cols in self.per_t.items()]
        parts.append("tree=" + "".join(bit(self.tree[c]) for c in TREE_COLUMNS))
        return " ".join(parts)


@dataclass
class CensusReport:
    n_max: int
    t_values: tuple[int, ...]
    records: list[CensusRecord] = field(default_factory=list)
    counterexamples: list[tuple[str, str]] = field(default_factory=list)

    def to_text(self) -> str:
        lines = [
            f"# census n<={self.n_max} t={','.join(map(str, self.t_values))}",
            "# per-t columns: " + " ".join(PER_T_COLUMNS) + "; tree columns: " + " ".join(TREE_COLUMNS),
        ]
        lines.extend(f"{r.graph6}\t{r.vector()}" for r in self.records)
        for g6, what in self.counterexamples:
            lines.append(f"# counterexample {g6}: {what}")
        lines.append(f"# graphs: {len(self.records)}")
        lines.append(f"# {len(self.counterexamples)} counterexamples")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class Recognizers:
    """The recognizers under test; swappable so the harness can test itself."""

    half_square: Callable = recognize_half_square_girth
    map_witness: Callable = recognize_map_witness_girth
    tree: Callable = recognize_tree_witness


def _check_graph(task) -> tuple[CensusRecord, list[tuple[str, str]]]:
    g6, t_values, oracle_max_n, recognizers = task
    g = from_graph6(g6)
    bg = build_vertex_clique_incidence(g)
    bg_girth = girth(bg)
    bg_planar = is_planar(bg).planar
    diamond_free = find_diamond(g) is None
    bad = []
    per_t = {}
    for t in t_values:
        ii = diamond_free and (t - 1 < 4 or find_short_induced_cycle(g, t - 1) is None)
        iii = bg_girth >= 2 * t
        hs = recognizers.half_square(g, 2 * t).accepted
        mp = recognizers.map_witness(g, 2 * t).accepted
        map_def = iii and bg_planar
        cols: dict[str, bool | None] = {
            "ii": ii, "iii": iii, "hs": hs, "map": mp, "map-def": map_def,
            "oracle-map": None, "oracle-hs": None,
        }
        if ii != iii:
            bad.append(f"t={t}: forbidden-subgraph test {ii} vs B_G girth test {iii}")
        if hs != iii:
            bad.append(f"t={t}: half-square recognizer {hs} vs B_G girth test {iii}")
        if (ii and bg_planar) != map_def:
            bad.append(f"t={t}: map characterizations disagree")
        if mp != map_def:
            bad.append(f"t={t}: map recognizer {mp} vs planar B_G of girth >= 2t {map_def}")
        if g.n <= oracle_max_n:
            om = brute_force_witness_search(g, 2 * t, True) is not None
            oh = brute_force_witness_search(g, 2 * t, False) is not None
            cols["oracle-map"], cols["oracle-hs"] = om, oh
            if om != mp:
                bad.append(f"t={t}: map recognizer {mp} vs exhaustive witness search {om}")
            if oh != hs:
                bad.append(f"t={t}: half-square recognizer {hs} vs exhaustive witness search {oh}")
        per_t[t] = cols
    tree = {
        "tree": recognizers.tree(g).accepted,
        "block": is_block_graph(g),
        "bg-acyclic": bg_girth == INFINITE,
    }
    if len(set(tree.values())) != 1:
        bad.append(f"tree witness / block graph / acyclic B_G disagree: {tree}")
    record = CensusRecord(g6, g.n, per_t, tree)
    return record, [(g6, what) for what in bad]


def run_census(
    n_max: int,
    t_values: tuple[int, ...] | list[int] = (4,),
    oracle_max_n: int = 5,
    workers: int = 1,
    recognizers: Recognizers | None = None,
) -> CensusReport:
    """Check the characterizations on every connected graph with ``n <= n_max``.

    Graphs are canonical representatives; ``workers > 1`` spreads them over
    processes (recognizers must then be picklable module-level callables).
    """
    if n_max > MAX_CENSUS_N:
        raise LimitExceeded(f"census is limited to n <= {MAX_CENSUS_N}, got {n_max}")
    if oracle_max_n > MAX_SEARCH_N:
        raise LimitExceeded(f"witness search is limited to n <= {MAX_SEARCH_N}")
    t_values = tuple(t_values)
    if any(t < 4 for t in t_values):
        raise ValueError("t values must be at least 4")
    recognizers = recognizers or Recognizers()
    tasks = [
        (to_graph6(g), t_values, oracle_max_n, recognizers)
        for n in range(1, n_max + 1)
        for g in enumerate_connected_graphs(n)
    ]
    report = CensusReport(n_max, t_values)
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_check_graph, tasks, chunksize=8))
    else:
        results = [_check_graph(task) for task in tasks]
    for record, bad in results:
        report.records.append(record)
        report.counterexamples.extend(bad)
    return report
