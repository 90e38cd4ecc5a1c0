import itertools
import random

import networkx as nx
import pytest

from mapwitness.detect import is_diamond_free
from mapwitness.generators import random_bipartite, random_graph
from mapwitness.graph import BipartiteGraph, Graph, components, find_cycle_shorter_than, girth
from mapwitness.incidence import build_vertex_clique_incidence, drop_small_points, half_square
from mapwitness.oracle import (
    MAX_SEARCH_N,
    LimitExceeded,
    Recognizers,
    brute_force_is_planar,
    brute_force_witness_search,
    canonical_form,
    canonical_graph,
    clique_partitions,
    enumerate_connected_graphs,
    run_census,
)
from mapwitness.planarity import is_planar
from mapwitness.recognizer import recognize_map_witness_girth

from conftest import atlas, to_nx


def test_enumeration_counts():
    # connected graphs up to isomorphism: 1, 1, 2, 6, 21, 112
    counts = [sum(1 for _ in enumerate_connected_graphs(n)) for n in range(1, 7)]
    assert counts == [1, 1, 2, 6, 21, 112]
    assert list(enumerate_connected_graphs(0)) == []


def test_enumeration_matches_atlas():
    for n in range(1, 7):
        ours = {canonical_form(g)[0] for g in enumerate_connected_graphs(n)}
        theirs = {canonical_form(g)[0] for g in atlas(n, connected=True) if g.n == n}
        assert ours == theirs


def test_labeled_enumeration_counts():
    # connected labeled graphs: 1, 1, 4, 38, 728
    counts = [sum(1 for _ in enumerate_connected_graphs(n, canonical=False)) for n in range(1, 6)]
    assert counts == [1, 1, 4, 38, 728]


def test_enumeration_limit():
    with pytest.raises(LimitExceeded):
        enumerate_connected_graphs(9)


def test_canonical_form_is_an_isomorphism_invariant():
    rng = random.Random(81)
    for _ in range(300):
        g = random_graph(rng.randint(1, 8), rng.random(), rng)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert canonical_form(g)[0] == canonical_form(h)[0]
        assert canonical_graph(g) == canonical_graph(h)
        assert nx.is_isomorphic(to_nx(g), to_nx(canonical_graph(g)))


def test_canonical_form_separates_non_isomorphic_graphs():
    graphs = atlas(6)
    codes = {(g.n, canonical_form(g)[0]) for g in graphs}
    assert len(codes) == len(graphs)


def test_brute_force_planarity_against_networkx():
    rng = random.Random(82)
    for _ in range(200):
        g = random_graph(rng.randint(1, 9), rng.uniform(0.3, 0.8), rng)
        assert brute_force_is_planar(g) == nx.check_planarity(to_nx(g))[0]
    with pytest.raises(LimitExceeded):
        brute_force_is_planar(Graph.cycle(11))


def test_clique_partitions_of_small_complete_graphs():
    assert len(list(clique_partitions(Graph.complete(3)))) == 2
    parts = list(clique_partitions(Graph.complete(4)))
    # K4 whole, four triangle-plus-three-edges, all six edges
    assert len(parts) == 6
    assert len({tuple(sorted(p)) for p in parts}) == 6
    for p in parts:
        pairs = [e for q in p for e in itertools.combinations(q, 2)]
        assert sorted(pairs) == list(Graph.complete(4).edges())


def test_clique_partitions_cover_each_edge_once():
    rng = random.Random(83)
    for _ in range(100):
        g = random_graph(rng.randint(2, 7), rng.uniform(0.3, 0.8), rng)
        for p in clique_partitions(g):
            pairs = sorted(e for q in p for e in itertools.combinations(q, 2))
            assert pairs == list(g.edges())
            assert all(len(q) >= 2 for q in p)


def test_reduction_neighborhoods_are_cliques_sharing_at_most_one_vertex():
    rng = random.Random(84)
    seen = 0
    while seen < 500:
        b = random_bipartite(rng.randint(2, 8), rng.randint(1, 8), rng.uniform(0.2, 0.6), rng)
        if find_cycle_shorter_than(b, 6) is not None:
            continue
        seen += 1
        h = half_square(b)
        big = [nb for nb in b.neighborhoods if len(nb) >= 2]
        for nb in big:
            assert all(h.has_edge(u, v) for u, v in itertools.combinations(nb, 2))
        for p, q in itertools.combinations(big, 2):
            assert len(set(p) & set(q)) <= 1
        # the large neighborhoods partition the edges of the half-square
        pairs = sorted(e for nb in big for e in itertools.combinations(nb, 2))
        assert pairs == list(h.edges())


def test_reduction_small_points_are_removable():
    rng = random.Random(85)
    for _ in range(500):
        b = random_bipartite(rng.randint(1, 8), rng.randint(0, 8), rng.uniform(0.1, 0.6), rng)
        d = drop_small_points(b)
        assert half_square(d) == half_square(b)
        assert girth(d) >= girth(b)
        assert is_planar(d).planar or not is_planar(b).planar


def test_reduction_every_partition_is_a_girth_six_witness():
    rng = random.Random(86)
    for _ in range(60):
        g = random_graph(rng.randint(2, 6), rng.uniform(0.4, 0.9), rng)
        for p in itertools.islice(clique_partitions(g), 50):
            b = BipartiteGraph(g.n, p)
            assert half_square(b) == g
            assert girth(b) >= 6


def test_search_examples(map4, dfp):
    w = brute_force_witness_search(Graph.complete(3), 6, True)
    assert w.neighborhoods == ((0, 1, 2),)
    assert brute_force_witness_search(map4[0], 6, True) is None
    assert brute_force_witness_search(map4[0], 6, False) is not None
    g, _ = dfp
    w = brute_force_witness_search(g, 8, False)
    assert w is not None and half_square(w) == g and girth(w) >= 8
    assert sorted(w.neighborhoods) == sorted(build_vertex_clique_incidence(g).neighborhoods)
    assert brute_force_witness_search(g, 8, True) is None


def test_search_argument_checks():
    with pytest.raises(ValueError):
        brute_force_witness_search(Graph.complete(3), 7, True)
    with pytest.raises(ValueError):
        brute_force_witness_search(Graph.complete(3), 4, True)
    with pytest.raises(ValueError):
        brute_force_witness_search(Graph(2), 6, True)
    with pytest.raises(LimitExceeded):
        brute_force_witness_search(Graph.path(MAX_SEARCH_N + 1), 6, True)


def test_every_planar_connected_graph_has_a_planar_girth_six_witness():
    for g in atlas(7, connected=True):
        if is_planar(g):
            w = brute_force_witness_search(g, 6, True)
            assert w is not None
            assert half_square(w) == g and girth(w) >= 6 and is_planar(w)


def test_search_agrees_with_map_recognizer_on_small_graphs():
    for n in range(1, 6):
        for g in enumerate_connected_graphs(n):
            for t in (4, 5):
                found = brute_force_witness_search(g, 2 * t, True) is not None
                assert found == recognize_map_witness_girth(g, 2 * t).accepted


def test_census_small():
    report = run_census(4, (4,))
    assert report.counterexamples == []
    assert len(report.records) == 1 + 1 + 2 + 6
    text = report.to_text()
    assert text.endswith("# 0 counterexamples\n")
    first = text.splitlines()[2]
    assert first.split("\t")[0] == "@"


def test_census_vectors_are_consistent():
    report = run_census(5, (4, 5), oracle_max_n=4)
    assert not report.counterexamples
    for rec in report.records:
        for t, cols in rec.per_t.items():
            if rec.n > 4:
                assert cols["oracle-map"] is None
            else:
                assert cols["oracle-map"] == cols["map"]
        assert len(set(rec.tree.values())) == 1


def _always_yes(g, girth_min):
    return recognize_map_witness_girth(Graph.complete(3), 8)


def _accept_diamond_free(g, girth_min):
    # wrong on purpose: skips the girth condition
    r = recognize_map_witness_girth(Graph.complete(3), 8)
    return r if is_diamond_free(g) else recognize_map_witness_girth(g, girth_min)


def test_census_detects_mutated_recognizers():
    bad = run_census(4, (4,), recognizers=Recognizers(map_witness=_always_yes))
    assert bad.counterexamples
    assert all(g6 for g6, _ in bad.counterexamples)
    subtle = run_census(5, (5,), recognizers=Recognizers(half_square=_accept_diamond_free))
    assert subtle.counterexamples
    assert "# 0 counterexamples" not in subtle.to_text()


def test_census_limits():
    with pytest.raises(LimitExceeded):
        run_census(8)
    with pytest.raises(ValueError):
        run_census(3, (3,))


def test_witness_search_returns_connected_witness_on_connected_input():
    rng = random.Random(87)
    for _ in range(40):
        g = random_graph(rng.randint(2, 6), 0.6, rng)
        if len(components(g)) > 1:
            continue
        w = brute_force_witness_search(g, 6, False)
        assert w is not None
        assert len(components(w.to_graph())) == 1 or g.n == 1
