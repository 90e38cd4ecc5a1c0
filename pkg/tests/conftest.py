from __future__ import annotations

import itertools
from importlib import resources

import networkx as nx
import pytest

from mapwitness.formats import from_labeled_edgelist, witness_from_text
from mapwitness.graph import BipartiteGraph, Graph, girth, induced_subgraph


def data_text(name: str) -> str:
    return (resources.files("mapwitness") / "data" / name).read_text()


def data_path(name: str):
    return resources.files("mapwitness") / "data" / name


def load_fixture(name: str) -> tuple[Graph, list[str]]:
    return from_labeled_edgelist(data_text(name))


def to_nx(g: Graph | BipartiteGraph) -> nx.Graph:
    if isinstance(g, BipartiteGraph):
        g = g.to_graph()
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return Graph(len(index), ((index[u], index[v]) for u, v in h.edges()))


def atlas(max_n: int, connected: bool = False) -> list[Graph]:
    """Every graph on 1..max_n vertices up to isomorphism (networkx atlas, n <= 7)."""
    out = []
    for h in nx.graph_atlas_g()[1:]:
        if h.number_of_nodes() > max_n:
            break
        if connected and not nx.is_connected(h):
            continue
        out.append(from_nx(h))
    return out


def petersen() -> Graph:
    return from_nx(nx.petersen_graph())


def diamond() -> Graph:
    # K4 minus the edge 0-3; 0 and 3 are the degree-2 vertices
    return Graph(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def naive_maximal_cliques(g: Graph) -> list[tuple[int, ...]]:
    cliques = [
        s
        for k in range(1, g.n + 1)
        for s in itertools.combinations(range(g.n), k)
        if all(g.has_edge(u, v) for u, v in itertools.combinations(s, 2))
    ]
    sets = [set(c) for c in cliques]
    return sorted(c for c, s in zip(cliques, sets) if not any(s < t for t in sets))


def is_cycle_graph(g: Graph) -> bool:
    return g.n >= 3 and g.m == g.n and all(g.degree(v) == 2 for v in range(g.n)) and girth(g) == g.n


def induced_cycles(g: Graph, min_len: int = 4):
    """All induced cycles of length >= min_len, each once, in walk order."""
    for k in range(min_len, g.n + 1):
        for s in itertools.combinations(range(g.n), k):
            h = induced_subgraph(g, s)
            if h.m != k or any(h.degree(v) != 2 for v in range(k)):
                continue
            order = [0]
            prev = -1
            while len(order) < k:
                nxt = next(u for u in h.neighbors(order[-1]) if u != prev)
                prev = order[-1]
                order.append(nxt)
            if h.has_edge(order[-1], order[0]) and len(set(order)) == k:
                yield [s[i] for i in order]


def has_induced_c6(b: BipartiteGraph) -> bool:
    return any(True for c in induced_cycles(b.to_graph(), 6) if len(c) == 6)


@pytest.fixture(scope="session")
def map4():
    """Map graph with a girth-4 witness: (graph, labels, witness)."""
    g, labels = load_fixture("map_girth4.edges")
    w, wlabels = witness_from_text(data_text("map_girth4.witness"))
    assert wlabels == labels
    return g, labels, w


@pytest.fixture(scope="session")
def dfp():
    """Diamond-free planar graph whose B_G is nonplanar: (graph, labels)."""
    return load_fixture("diamond_free_planar.edges")
