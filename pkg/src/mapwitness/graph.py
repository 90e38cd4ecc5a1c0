"""Simple undirected graphs, two-sided bipartite graphs, traversal and girth."""

from __future__ import annotations

import heapq
import math
from collections import deque
from typing import Iterable, Iterator, Sequence

INFINITE = math.inf


class Graph:
    """Immutable simple undirected graph on the vertices ``0..n-1``."""

    __slots__ = ("_n", "_adj", "_sets", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()) -> None:
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        sets: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            sets[u].add(v)
            sets[v].add(u)
        self._init(n, sets)

    def _init(self, n: int, sets: Sequence[Iterable[int]]) -> None:
        self._n = n
        self._adj = tuple(tuple(sorted(s)) for s in sets)
        self._sets = tuple(map(frozenset, self._adj))
        self._m = sum(map(len, self._adj)) // 2

    @classmethod
    def from_adjacency(cls, adjacency: Sequence[Iterable[int]]) -> Graph:
        """Build from per-vertex neighbor collections; symmetry is checked."""
        g = cls.__new__(cls)
        g._init(len(adjacency), adjacency)
        for u, nbrs in enumerate(g._adj):
            for v in nbrs:
                if v == u or not (0 <= v < g._n) or u not in g._sets[v]:
                    raise ValueError(f"adjacency is not simple and symmetric at ({u}, {v})")
        return g

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, ((u, v) for u in range(n) for v in range(u + 1, n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, ((i, (i + 1) % n) for i in range(n)))

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls(n, ((i, i + 1) for i in range(n - 1)))

    @property
    def n(self) -> int:
        return self._n

    @property
    def m(self) -> int:
        return self._m

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self._adj[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        return self._sets[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._sets[u]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, nbrs in enumerate(self._adj):
            for v in nbrs:
                if v > u:
                    yield u, v

    def relabel(self, perm: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self._n, ((perm[u], perm[v]) for u, v in self.edges()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self._n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, m={self._m})"


class BipartiteGraph:
    """Two-sided graph: ``vertex_count`` vertices and one neighborhood per point.

    Point ``i`` is adjacent to the vertices in ``neighborhoods[i]``. When the
    bipartite graph is flattened with :meth:`to_graph`, vertices keep their
    ids and point ``i`` becomes node ``vertex_count + i``.
    """

    __slots__ = ("_nv", "_points", "_labels", "_flat")

    def __init__(
        self,
        vertex_count: int,
        neighborhoods: Iterable[Iterable[int]] = (),
        point_labels: Sequence[object] | None = None,
    ) -> None:
        if vertex_count < 0:
            raise ValueError("vertex count must be non-negative")
        points = []
        for i, nb in enumerate(neighborhoods):
            members = tuple(sorted(set(nb)))
            if members and not (0 <= members[0] and members[-1] < vertex_count):
                raise ValueError(f"point {i} has a neighbor outside 0..{vertex_count - 1}")
            points.append(members)
        self._nv = vertex_count
        self._points = tuple(points)
        if point_labels is not None:
            point_labels = tuple(point_labels)
            if len(point_labels) != len(self._points):
                raise ValueError("one label per point is required")
        self._labels = point_labels
        self._flat: Graph | None = None

    @property
    def vertex_count(self) -> int:
        return self._nv

    @property
    def point_count(self) -> int:
        return len(self._points)

    @property
    def neighborhoods(self) -> tuple[tuple[int, ...], ...]:
        return self._points

    @property
    def point_labels(self) -> tuple[object, ...] | None:
        return self._labels

    @property
    def edge_count(self) -> int:
        return sum(len(p) for p in self._points)

    def point_neighbors(self, w: int) -> tuple[int, ...]:
        return self._points[w]

    def vertex_neighbors(self) -> list[list[int]]:
        """Points adjacent to each vertex, ascending."""
        out: list[list[int]] = [[] for _ in range(self._nv)]
        for w, nb in enumerate(self._points):
            for v in nb:
                out[v].append(w)
        return out

    def edges(self) -> Iterator[tuple[int, int]]:
        """Incidences ``(vertex, point)`` ordered by point, then vertex."""
        for w, nb in enumerate(self._points):
            for v in nb:
                yield v, w

    def to_graph(self) -> Graph:
        if self._flat is not None:
            return self._flat
        nv = self._nv
        lists: list[list[int]] = [[] for _ in range(nv)]
        for w, nb in enumerate(self._points):
            node = nv + w
            for v in nb:
                lists[v].append(node)
        # both sides come out ascending already
        adj = tuple(map(tuple, lists)) + self._points
        g = Graph.__new__(Graph)
        g._n = len(adj)
        g._adj = adj
        g._sets = tuple(map(frozenset, adj))
        g._m = sum(map(len, self._points))
        self._flat = g
        return g

    def without_points(self, drop: Iterable[int]) -> BipartiteGraph:
        gone = set(drop)
        keep = [w for w in range(len(self._points)) if w not in gone]
        labels = None if self._labels is None else [self._labels[w] for w in keep]
        return BipartiteGraph(self._nv, (self._points[w] for w in keep), labels)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BipartiteGraph):
            return NotImplemented
        return self._nv == other._nv and self._points == other._points

    def __hash__(self) -> int:
        return hash((self._nv, self._points))

    def __repr__(self) -> str:
        return f"BipartiteGraph(vertices={self._nv}, points={len(self._points)}, edges={self.edge_count})"


def _as_graph(g: Graph | BipartiteGraph) -> Graph:
    return g.to_graph() if isinstance(g, BipartiteGraph) else g


def components(g: Graph) -> list[list[int]]:
    """Connected components as ascending vertex lists, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    adj = g.adjacency
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        comp.sort()
        out.append(comp)
    return out


def is_connected(g: Graph | BipartiteGraph) -> bool:
    g = _as_graph(g)
    return len(components(g)) <= 1


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """``G[S]`` relabeled so that the i-th smallest member of ``S`` becomes ``i``."""
    members = sorted(set(vertices))
    for v in members:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    index = {v: i for i, v in enumerate(members)}
    sets = [[index[u] for u in g.neighbors(v) if u in index] for v in members]
    h = Graph.__new__(Graph)
    h._init(len(members), sets)
    return h


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    sets: list[list[int]] = []
    for h in graphs:
        off = len(sets)
        sets.extend([v + off for v in nb] for nb in h.adjacency)
    g = Graph.__new__(Graph)
    g._init(len(sets), sets)
    return g


# -- girth -----------------------------------------------------------------
#
# Cycles are searched on a compressed multigraph: vertices of degree <= 1 are
# pruned away (they lie on no cycle) and maximal chains of degree-2 vertices
# become single weighted edges. Each compressed edge remembers the original
# vertices strictly inside its chain so that cycles can be expanded back.


class _Compressed:
    __slots__ = ("nodes", "adj", "ends", "weight", "inner", "loops")

    def __init__(self) -> None:
        self.nodes: list[int] = []
        self.adj: dict[int, list[tuple[int, int]]] = {}
        self.ends: list[tuple[int, int]] = []
        self.weight: list[int] = []
        self.inner: list[tuple[int, ...]] = []
        # pure cycles made only of degree-2 vertices
        self.loops: list[list[int]] = []


def _compress(g: Graph) -> _Compressed:
    adj = g.adjacency
    deg = [len(a) for a in adj]
    alive = [True] * g.n
    stack = [v for v in range(g.n) if deg[v] <= 1]
    while stack:
        v = stack.pop()
        if not alive[v]:
            continue
        alive[v] = False
        for u in adj[v]:
            if alive[u]:
                deg[u] -= 1
                if deg[u] == 1:
                    stack.append(u)
    c = _Compressed()
    branch = [alive[v] and deg[v] >= 3 for v in range(g.n)]
    c.nodes = [v for v in range(g.n) if branch[v]]
    c.adj = {v: [] for v in c.nodes}
    done = [False] * g.n  # degree-2 vertices already absorbed into a chain
    for s in c.nodes:
        for first in adj[s]:
            if not alive[first] or done[first] or (branch[first] and first < s):
                continue
            prev, cur = s, first
            inner = []
            while not branch[cur]:
                inner.append(cur)
                done[cur] = True
                for u in adj[cur]:
                    if u != prev and alive[u]:
                        prev, cur = cur, u
                        break
            eid = len(c.ends)
            c.ends.append((s, cur))
            c.weight.append(len(inner) + 1)
            c.inner.append(tuple(inner))
            c.adj[s].append((cur, eid))
            if cur != s:
                c.adj[cur].append((s, eid))
    for v in range(g.n):
        if alive[v] and not branch[v] and not done[v]:
            loop = [v]
            done[v] = True
            prev, cur = v, next(u for u in adj[v] if alive[u])
            while cur != v:
                loop.append(cur)
                done[cur] = True
                nxt = next(u for u in adj[cur] if alive[u] and u != prev)
                prev, cur = cur, nxt
            c.loops.append(loop)
    return c


def _walk(c: _Compressed, eid: int, frm: int) -> list[int]:
    """Original vertices of edge ``eid`` traversed from ``frm``, excluding ``frm``."""
    a, b = c.ends[eid]
    if frm == a:
        return list(c.inner[eid]) + [b]
    return list(reversed(c.inner[eid])) + [a]


def _shortest_cycle(g: Graph, below: float) -> list[int] | None:
    """A shortest cycle of ``g`` if its length is ``< below``, else ``None``.

    Runs Dijkstra from every branch vertex of the compressed multigraph. A
    closed walk root->u, (u,v), v->root through a non-tree edge contains a
    cycle of at most that length, and for a root on a shortest cycle some edge
    of that cycle attains its length, so the minimum over roots is exact. With
    an upper bound only nodes within ``(below - 1) / 2`` of the root matter.
    """
    c = _compress(g)
    best_len = below
    best: tuple[int, int, int, dict, dict] | None = None
    best_loop = None
    for loop in c.loops:
        if len(loop) < best_len:
            best_len, best_loop = len(loop), loop
    unit = all(w == 1 for w in c.weight)
    for root in c.nodes:
        if best_len <= 3:
            break
        radius = (best_len - 1) // 2 if best_len != INFINITE else INFINITE
        dist = {root: 0}
        parent: dict[int, int] = {root: -1}
        found = _search_root(c, root, radius, dist, parent, unit, best_len)
        if found is not None:
            length, eid = found
            best_len = length
            best = (root, eid, length, dist, parent)
            best_loop = None
    if best is not None:
        root, eid, _, dist, parent = best
        return _expand(c, eid, parent)
    return best_loop


def _search_root(c, root, radius, dist, parent, unit, bound):
    """Explore from ``root`` and return ``(length, edge)`` of the best closed walk below ``bound``."""
    adj = c.adj
    weight = c.weight
    best_len = bound
    best_edge = None
    settled = []
    if unit:
        queue = deque([root])
        while queue:
            u = queue.popleft()
            du = dist[u]
            settled.append(u)
            if du >= radius:
                continue
            for v, eid in adj[u]:
                if v not in dist:
                    dist[v] = du + 1
                    parent[v] = eid
                    queue.append(v)
    else:
        heap = [(0, root)]
        done = set()
        while heap:
            du, u = heapq.heappop(heap)
            if u in done:
                continue
            done.add(u)
            settled.append(u)
            for v, eid in adj[u]:
                nd = du + weight[eid]
                if nd <= radius and (v not in dist or nd < dist[v]):
                    dist[v] = nd
                    parent[v] = eid
                    heapq.heappush(heap, (nd, v))
    in_tree = set(settled)
    for u in settled:
        du = dist[u]
        for v, eid in adj[u]:
            if v not in in_tree or eid == parent[u] or eid == parent[v]:
                continue
            length = du + dist[v] + weight[eid]
            if length < best_len or (length == best_len and best_edge is not None and eid < best_edge):
                best_len, best_edge = length, eid
    if best_edge is None:
        return None
    return best_len, best_edge


def _expand(c: _Compressed, eid: int, parent: dict[int, int]) -> list[int]:
    a, b = c.ends[eid]

    def tree_path(x: int) -> list[tuple[int, int]]:
        out = []
        while parent[x] != -1:
            e = parent[x]
            p, q = c.ends[e]
            prev = p if q == x else q
            out.append((prev, e))
            x = prev
        return out

    pa, pb = tree_path(a), tree_path(b)
    nodes_a = [a] + [p for p, _ in pa]
    nodes_b = [b] + [p for p, _ in pb]
    common = set(nodes_a) & set(nodes_b)
    # cut both paths at their lowest common ancestor
    ia = next(i for i, x in enumerate(nodes_a) if x in common)
    lca = nodes_a[ia]
    ib = nodes_b.index(lca)
    cycle = [lca]
    for i in range(ia - 1, -1, -1):
        x = nodes_a[i]
        cycle.extend(_walk(c, pa[i][1], pa[i][0]))
    cycle.extend(_walk(c, eid, a))
    for i in range(ib):
        cycle.extend(_walk(c, pb[i][1], nodes_b[i]))
    return cycle[:-1]


def girth(g: Graph | BipartiteGraph) -> float:
    """Length of a shortest cycle, or ``INFINITE`` for a forest."""
    g = _as_graph(g)
    cyc = _shortest_cycle(g, INFINITE)
    return INFINITE if cyc is None else len(cyc)


def shortest_cycle(g: Graph | BipartiteGraph) -> list[int] | None:
    """Vertices of one shortest cycle in traversal order, ``None`` if acyclic."""
    return _shortest_cycle(_as_graph(g), INFINITE)


def find_cycle_shorter_than(g: Graph | BipartiteGraph, bound: int) -> list[int] | None:
    """A shortest cycle of length ``< bound``, or ``None`` if the girth is at least ``bound``.

    Much cheaper than :func:`girth` on large sparse inputs since the search
    from each root stops at radius ``(bound - 1) // 2``.
    """
    return _shortest_cycle(_as_graph(g), bound)
