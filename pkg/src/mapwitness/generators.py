"""Instance generators for tests, benchmarks and the acceptance suite."""

from __future__ import annotations

import random

from .graph import BipartiteGraph, Graph, components


def random_planar_triangulation(n: int, rng: random.Random, flips: int | None = None) -> Graph:
    """Random maximal planar graph on ``n >= 3`` vertices.

    Vertices are inserted into uniformly chosen faces, then random diagonal
    flips (rejecting those that would create a parallel edge) mix the result.
    """
    if n < 3:
        raise ValueError("a triangulation needs at least 3 vertices")
    # oriented faces; half-edge (a, b) -> third vertex of the face left of it
    third = {(0, 1): 2, (1, 2): 0, (2, 0): 1, (1, 0): 2, (0, 2): 1, (2, 1): 0}
    faces = [(0, 1, 2), (1, 0, 2)]
    for v in range(3, n):
        i = rng.randrange(len(faces))
        a, b, c = faces[i]
        faces[i] = (a, b, v)
        faces.extend([(b, c, v), (c, a, v)])
        third[(a, b)] = v
        third[(b, c)] = v
        third[(c, a)] = v
        third[(b, v)], third[(v, a)] = a, b
        third[(c, v)], third[(v, b)] = b, c
        third[(a, v)], third[(v, c)] = c, a
    edge_list = sorted({(min(a, b), max(a, b)) for a, b in third})
    slot = {e: i for i, e in enumerate(edge_list)}
    if flips is None:
        flips = 2 * n
    for _ in range(flips if n >= 4 else 0):
        i = rng.randrange(len(edge_list))
        a, b = edge_list[i]
        c, d = third[(a, b)], third[(b, a)]
        new = (min(c, d), max(c, d))
        if c == d or new in slot:
            continue
        del slot[(a, b)]
        edge_list[i] = new
        slot[new] = i
        for he in ((a, b), (b, a)):
            del third[he]
        # faces (c, a, d) and (d, b, c)
        third[(c, a)], third[(a, d)], third[(d, c)] = d, c, a
        third[(d, b)], third[(b, c)], third[(c, d)] = c, d, b
    return Graph(n, edge_list)


def random_connected_planar(n: int, rng: random.Random, keep: float = 0.6) -> Graph:
    """Random triangulation with edges deleted at random while staying connected."""
    if n < 3:
        return Graph.path(n)
    g = random_planar_triangulation(n, rng)
    edges = list(g.edges())
    rng.shuffle(edges)
    kept = set(edges)
    target = int(len(edges) * keep)
    for e in edges:
        if len(kept) <= max(target, n - 1):
            break
        kept.discard(e)
        if len(components(Graph(n, kept))) > 1:
            kept.add(e)
    return Graph(n, kept)


def subdivide(g: Graph) -> Graph:
    """Replace every edge by a path of length two (new vertices follow the old ones)."""
    edges = []
    for k, (u, v) in enumerate(g.edges()):
        w = g.n + k
        edges.extend([(u, w), (w, v)])
    return Graph(g.n + g.m, edges)


def prism(k: int) -> Graph:
    """C_k x K_2: cubic and planar."""
    edges = []
    for i in range(k):
        j = (i + 1) % k
        edges.extend([(i, j), (k + i, k + j), (i, k + i)])
    return Graph(2 * k, edges)


def truncate_cubic(g: Graph) -> Graph:
    """Replace each vertex of a cubic graph by a triangle, one corner per incident edge."""
    corner = {}
    for v in range(g.n):
        if g.degree(v) != 3:
            raise ValueError("truncate_cubic needs a cubic graph")
        for u in g.neighbors(v):
            corner[(v, u)] = len(corner)
    edges = []
    for v in range(g.n):
        a, b, c = (corner[(v, u)] for u in g.neighbors(v))
        edges.extend([(a, b), (b, c), (a, c)])
    for u, v in g.edges():
        edges.append((corner[(u, v)], corner[(v, u)]))
    return Graph(len(corner), edges)


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p))


def random_bipartite(vertices: int, points: int, p: float, rng: random.Random) -> BipartiteGraph:
    hoods = [[v for v in range(vertices) if rng.random() < p] for _ in range(points)]
    return BipartiteGraph(vertices, hoods)


def subdivided_triangulation(n_target: int, seed: int = 0) -> Graph:
    """Subdivision of a random triangulation with about ``n_target`` vertices.

    Triangle-free and planar, so its incidence graph is a double subdivision.
    """
    base = max(3, (n_target + 6 + 3) // 4)
    return subdivide(random_planar_triangulation(base, random.Random(seed)))


def truncated_prism(n_target: int) -> Graph:
    """Truncated prism with about ``n_target`` vertices: triangles joined by single edges."""
    return truncate_cubic(prism(max(3, (n_target + 5) // 6)))
