"""Planarity testing with the left-right criterion.

The test is a boolean version of the LR-partition algorithm (DFS orientation,
lowpoints and nesting depths, then a second DFS maintaining a stack of
conflict pairs). No embedding is built. Before testing, vertices of degree at
most one are dropped and degree-two vertices are smoothed, which keeps the
answer and shrinks subdivision-like inputs dramatically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import BipartiteGraph, Graph, _compress

CERTIFICATE_EDGE_LIMIT = 400


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    obstruction: tuple[tuple[int, int], ...] | None = None

    def __bool__(self) -> bool:
        return self.planar


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None

    def copy(self) -> _Interval:
        return _Interval(self.low, self.high)


class _Pair:
    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        self.left = _Interval() if left is None else left
        self.right = _Interval() if right is None else right

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


def _reduce(n: int, adjacency: Iterable[Iterable[int]]) -> tuple[int, list[list[int]]]:
    """Drop degree <= 1 vertices and smooth degree-2 vertices; parallel edges merge."""
    adj = [set(a) for a in adjacency]
    queue = [v for v in range(n) if len(adj[v]) <= 2]
    alive = [True] * n
    while queue:
        v = queue.pop()
        if not alive[v]:
            continue
        d = len(adj[v])
        if d <= 1:
            alive[v] = False
            for u in adj[v]:
                adj[u].discard(v)
                if len(adj[u]) <= 2:
                    queue.append(u)
            adj[v] = set()
        elif d == 2:
            a, b = adj[v]
            alive[v] = False
            adj[v] = set()
            adj[a].discard(v)
            adj[b].discard(v)
            adj[a].add(b)
            adj[b].add(a)
            for u in (a, b):
                if len(adj[u]) <= 2:
                    queue.append(u)
    keep = [v for v in range(n) if alive[v]]
    index = {v: i for i, v in enumerate(keep)}
    return len(keep), [sorted(index[u] for u in adj[v]) for v in keep]


def _lr_planar(n: int, adj: list[list[int]]) -> bool:
    m = sum(len(a) for a in adj) // 2
    if n >= 3 and m > 3 * n - 6:
        return False

    # phase 1: orientation, lowpoints, nesting depth
    height = [-1] * n
    parent_edge = [-1] * n
    parent_vertex = [-1] * n
    pending = [-1] * n
    ptr = [0] * n
    src: list[int] = []
    dst: list[int] = []
    lowpt: list[int] = []
    lowpt2: list[int] = []
    nesting: list[int] = []
    out: list[list[int]] = [[] for _ in range(n)]
    roots = []
    for r in range(n):
        if height[r] != -1:
            continue
        height[r] = 0
        roots.append(r)
        stack = [r]
        while stack:
            v = stack[-1]
            ei = pending[v]
            if ei == -1:
                nb = adj[v]
                i = ptr[v]
                if i == len(nb):
                    stack.pop()
                    continue
                w = nb[i]
                hw = height[w]
                hv = height[v]
                if w == parent_vertex[v] or hw > hv:
                    ptr[v] = i + 1
                    continue
                ei = len(src)
                src.append(v)
                dst.append(w)
                lowpt.append(hv)
                lowpt2.append(hv)
                nesting.append(0)
                out[v].append(ei)
                if hw == -1:
                    parent_edge[w] = ei
                    parent_vertex[w] = v
                    height[w] = hv + 1
                    pending[v] = ei
                    stack.append(w)
                    continue
                lowpt[ei] = hw
            else:
                pending[v] = -1
            # ei is finished: nesting depth and lowpoints of the parent edge
            hv = height[v]
            lo, lo2 = lowpt[ei], lowpt2[ei]
            nesting[ei] = 2 * lo + (1 if lo2 < hv else 0)
            e = parent_edge[v]
            if e != -1:
                le = lowpt[e]
                if lo < le:
                    lowpt2[e] = min(le, lo2)
                    lowpt[e] = lo
                elif lo > le:
                    lowpt2[e] = min(lowpt2[e], lo)
                else:
                    lowpt2[e] = min(lowpt2[e], lo2)
            ptr[v] += 1

    for v in range(n):
        if len(out[v]) > 1:
            out[v].sort(key=nesting.__getitem__)

    # phase 2: testing
    nedges = len(src)
    stack_bottom: list[_Pair | None] = [None] * nedges
    lowpt_edge = [-1] * nedges
    ref: list[int | None] = [None] * nedges
    S: list[_Pair] = []

    def conflicting(iv: _Interval, b: int) -> bool:
        return not (iv.low is None and iv.high is None) and lowpt[iv.high] > lowpt[b]

    def lowest(p: _Pair) -> int:
        if p.left.empty():
            return lowpt[p.right.low]
        if p.right.empty():
            return lowpt[p.left.low]
        return min(lowpt[p.left.low], lowpt[p.right.low])

    def add_constraints(ei: int, e: int) -> bool:
        p = _Pair()
        while True:
            q = S.pop()
            if not q.left.empty():
                q.swap()
            if not q.left.empty():
                return False
            if lowpt[q.right.low] > lowpt[e]:
                if p.right.empty():
                    p.right = q.right.copy()
                else:
                    ref[p.right.low] = q.right.high
                p.right.low = q.right.low
            else:
                ref[q.right.low] = lowpt_edge[e]
            if (S[-1] if S else None) is stack_bottom[ei]:
                break
        while S and (conflicting(S[-1].left, ei) or conflicting(S[-1].right, ei)):
            q = S.pop()
            if conflicting(q.right, ei):
                q.swap()
            if conflicting(q.right, ei):
                return False
            if p.right.low is not None:
                ref[p.right.low] = q.right.high
            if q.right.low is not None:
                p.right.low = q.right.low
            if p.left.empty():
                p.left = q.left.copy()
            elif p.left.low is not None:
                ref[p.left.low] = q.left.high
            p.left.low = q.left.low
        if not (p.left.empty() and p.right.empty()):
            S.append(p)
        return True

    ptr2 = [0] * n
    returning = [False] * n
    for r in roots:
        stack = [r]
        while stack:
            v = stack[-1]
            e = parent_edge[v]
            outs = out[v]
            i = ptr2[v]
            if i < len(outs):
                ei = outs[i]
                if not returning[v]:
                    stack_bottom[ei] = S[-1] if S else None
                    w = dst[ei]
                    if ei == parent_edge[w]:
                        returning[v] = True
                        stack.append(w)
                        continue
                    lowpt_edge[ei] = ei
                    S.append(_Pair(right=_Interval(ei, ei)))
                else:
                    returning[v] = False
                if lowpt[ei] < height[v]:
                    if i == 0:
                        lowpt_edge[e] = lowpt_edge[ei]
                    elif not add_constraints(ei, e):
                        return False
                ptr2[v] = i + 1
                continue
            stack.pop()
            if e == -1:
                continue
            u = src[e]
            hu = height[u]
            while S and lowest(S[-1]) == hu:
                S.pop()
            if S:
                p = S.pop()
                while p.left.high is not None and dst[p.left.high] == u:
                    p.left.high = ref[p.left.high]
                if p.left.high is None and p.left.low is not None:
                    ref[p.left.low] = p.right.low
                    p.left.low = None
                while p.right.high is not None and dst[p.right.high] == u:
                    p.right.high = ref[p.right.high]
                if p.right.high is None and p.right.low is not None:
                    ref[p.right.low] = p.left.low
                    p.right.low = None
                S.append(p)
            if lowpt[e] < hu:
                hl = S[-1].left.high
                hr = S[-1].right.high
                if hl is not None and (hr is None or lowpt[hl] > lowpt[hr]):
                    ref[e] = hl
                else:
                    ref[e] = hr
    return True


def _planar_adjacency(n: int, adjacency: Iterable[Iterable[int]]) -> bool:
    k, adj = _reduce(n, adjacency)
    return _lr_planar(k, adj)


def _planar_graph(g: Graph) -> bool:
    # chain compression first: cheap on huge sparse inputs, exact for planarity
    c = _compress(g)
    index = {v: i for i, v in enumerate(c.nodes)}
    adj: list[set[int]] = [set() for _ in c.nodes]
    for a, b in c.ends:
        if a != b:
            adj[index[a]].add(index[b])
            adj[index[b]].add(index[a])
    return _planar_adjacency(len(adj), adj)


def _edges_planar(edges: list[tuple[int, int]]) -> bool:
    nodes = sorted({x for e in edges for x in e})
    index = {v: i for i, v in enumerate(nodes)}
    adj: list[set[int]] = [set() for _ in nodes]
    for u, v in edges:
        adj[index[u]].add(index[v])
        adj[index[v]].add(index[u])
    return _planar_adjacency(len(nodes), adj)


def kuratowski_subgraph(g: Graph | BipartiteGraph) -> tuple[tuple[int, int], ...] | None:
    """Edges of a subdivided K5 or K3,3 in ``g``, or ``None`` if ``g`` is planar.

    Greedy edge deletion: an edge is dropped whenever the rest stays nonplanar.
    What survives is edge-minimal nonplanar, hence a Kuratowski subdivision.
    Costs one planarity test per edge.
    """
    if isinstance(g, BipartiteGraph):
        g = g.to_graph()
    edges = list(g.edges())
    if _edges_planar(edges):
        return None
    kept = list(edges)
    i = 0
    while i < len(kept):
        trial = kept[:i] + kept[i + 1 :]
        if not _edges_planar(trial):
            kept = trial
        else:
            i += 1
    return tuple(kept)


def is_kuratowski_subdivision(edges: Iterable[tuple[int, int]]) -> bool:
    """True iff the edge set is exactly a subdivision of K5 or K3,3."""
    adj: dict[int, set[int]] = {}
    count = 0
    for u, v in edges:
        if u == v or v in adj.get(u, ()):
            return False
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
        count += 1
    if any(len(a) < 2 for a in adj.values()):
        return False
    branch = sorted(v for v, a in adj.items() if len(a) >= 3)
    if len(branch) not in (5, 6):
        return False
    bset = set(branch)
    links: set[frozenset[int]] = set()
    used = 0
    for s in branch:
        for first in adj[s]:
            prev, cur, length = s, first, 1
            while cur not in bset:
                prev, cur = cur, next(x for x in adj[cur] if x != prev)
                length += 1
            if cur == s:
                return False
            key = frozenset((s, cur))
            if s < cur:
                if key in links:
                    return False
                links.add(key)
                used += length
    if used != count:
        return False  # stray cycles disjoint from the branch vertices
    if len(branch) == 5:
        return len(links) == 10
    if len(links) != 9 or any(len(adj[v]) != 3 for v in branch):
        return False
    # K3,3: the first branch vertex and its three branch neighbors split the sides
    side = {branch[0]}
    other = {x for link in links if branch[0] in link for x in link} - side
    side |= {x for x in branch if x not in other}
    return len(side) == 3 and all(len(link & side) == 1 for link in links)


def is_planar(g: Graph | BipartiteGraph, certificate: bool = False) -> PlanarityResult:
    """Exact planarity verdict.

    With ``certificate=True`` a nonplanar input of at most
    ``CERTIFICATE_EDGE_LIMIT`` edges also gets a Kuratowski subdivision
    (node ids of the flattened graph for bipartite input).
    """
    if isinstance(g, BipartiteGraph):
        g = g.to_graph()
    if _planar_graph(g):
        return PlanarityResult(True)
    obstruction = None
    if certificate and g.m <= CERTIFICATE_EDGE_LIMIT:
        obstruction = kuratowski_subgraph(g)
    return PlanarityResult(False, obstruction)
