import dataclasses
import random

import networkx as nx
import pytest

from mapwitness.detect import ObstructionKind, find_short_induced_cycle, is_block_graph, is_diamond_free
from mapwitness.generators import random_connected_planar, random_graph, subdivided_triangulation, truncated_prism
from mapwitness.graph import INFINITE, Graph, disjoint_union, girth
from mapwitness.incidence import build_vertex_clique_incidence, half_square
from mapwitness.planarity import is_planar
from mapwitness.recognizer import (
    GirthParameterError,
    GirthParameterTooSmall,
    Mode,
    OddGirthParameter,
    SoundnessError,
    Verdict,
    _finish,
    _Timer,
    recognize,
    recognize_half_square_girth,
    recognize_map_witness_girth,
    recognize_tree_witness,
    report_problem,
)

from conftest import atlas, complete_bipartite, diamond, petersen


def test_diamond_is_rejected():
    r = recognize_map_witness_girth(diamond(), 8)
    assert r.verdict is Verdict.NO and r.obstruction.kind is ObstructionKind.DIAMOND
    assert sorted(r.obstruction.vertices) == [0, 1, 2, 3]


def test_diamond_free_planar_fixture(dfp):
    g, _ = dfp
    hs = recognize_half_square_girth(g, 8)
    assert hs.accepted and hs.witness == build_vertex_clique_incidence(g)
    assert hs.witness.point_count == 9
    mp = recognize_map_witness_girth(g, 8)
    assert mp.verdict is Verdict.NO
    assert mp.obstruction.kind is ObstructionKind.BG_NONPLANAR
    assert mp.summary().startswith("No: B_G nonplanar")


def test_petersen_half_square_girth_ten():
    r = recognize_half_square_girth(petersen(), 10)
    assert r.accepted and girth(r.witness) == 10
    assert recognize_map_witness_girth(petersen(), 10).obstruction.kind is ObstructionKind.BG_NONPLANAR


def test_triangle_and_c5():
    r = recognize_map_witness_girth(Graph.complete(3), 8)
    assert r.accepted and r.witness.neighborhoods == ((0, 1, 2),)
    assert girth(r.witness) == INFINITE
    r = recognize_map_witness_girth(Graph.cycle(5), 10)
    assert r.accepted and girth(r.witness) == 10 and is_planar(r.witness)


def test_tree_witness_examples():
    assert recognize_tree_witness(Graph.complete(4)).accepted
    assert recognize_tree_witness(Graph.cycle(4)).verdict is Verdict.NO
    r = recognize_tree_witness(diamond())
    assert r.verdict is Verdict.NO and r.obstruction.kind is ObstructionKind.DIAMOND
    assert recognize_tree_witness(Graph(0)).accepted


def test_map4_is_rejected_in_every_mode(map4):
    g, _, _ = map4
    for mode in Mode:
        r = recognize(g, mode, None if mode is Mode.TREE else 8)
        assert r.obstruction.kind is ObstructionKind.DIAMOND


@pytest.mark.parametrize("bad, error", [(7, OddGirthParameter), (9, OddGirthParameter), (6, GirthParameterTooSmall), (4, GirthParameterTooSmall)])
def test_girth_parameter_errors(bad, error):
    with pytest.raises(error):
        recognize_map_witness_girth(Graph.complete(3), bad)
    with pytest.raises(GirthParameterError):
        recognize_half_square_girth(Graph.complete(3), bad)


def test_recognize_dispatch():
    assert recognize(Graph.complete(3), "TreeWitness").accepted
    assert recognize(Graph.complete(3), Mode.HALF_SQUARE, 8).accepted
    with pytest.raises(GirthParameterError):
        recognize(Graph.complete(3), Mode.MAP_WITNESS)


def test_induced_cycle_obstruction_for_larger_t():
    r = recognize_half_square_girth(Graph.cycle(5), 12)
    assert r.obstruction.kind is ObstructionKind.INDUCED_CYCLE and r.obstruction.cycle_length == 5
    r = recognize_half_square_girth(Graph.cycle(4), 10)
    assert r.obstruction.cycle_length == 4
    # C4 is fine for girth 8: B_G = C8
    assert recognize_half_square_girth(Graph.cycle(4), 8).accepted


def test_clique_cap_in_map_mode_only():
    g = complete_bipartite(60, 60)
    r = recognize_map_witness_girth(g, 8)
    assert r.obstruction.kind is ObstructionKind.CLIQUE_CAP
    assert "3240" in r.obstruction.describe()
    assert recognize_half_square_girth(g, 8).accepted


def test_forbidden_subgraph_and_girth_conditions_agree():
    for g in atlas(6, connected=True):
        b = build_vertex_clique_incidence(g)
        bg = girth(b)
        for t in (4, 5, 6):
            ii = is_diamond_free(g) and (t - 1 < 4 or find_short_induced_cycle(g, t - 1) is None)
            assert ii == (bg >= 2 * t)
            assert recognize_half_square_girth(g, 2 * t).accepted == ii
            assert recognize_map_witness_girth(g, 2 * t).accepted == (ii and is_planar(b).planar)


def test_tree_witness_matches_block_graphs():
    for g in atlas(6, connected=True):
        r = recognize_tree_witness(g)
        assert r.accepted == is_block_graph(g) == (girth(build_vertex_clique_incidence(g)) == INFINITE)


def test_monotonicity():
    rng = random.Random(71)
    for _ in range(300):
        g = random_connected_planar(rng.randint(3, 25), rng, keep=rng.uniform(0.3, 0.8))
        accepted = [recognize_map_witness_girth(g, 2 * t).accepted for t in range(4, 9)]
        # once rejected, every larger bound is rejected too
        assert accepted == sorted(accepted, reverse=True)


def test_disconnected_inputs_are_componentwise():
    a, b = Graph.cycle(5), diamond()
    assert recognize_half_square_girth(disjoint_union([a, Graph.complete(3)]), 10).accepted
    assert not recognize_half_square_girth(disjoint_union([a, b]), 8).accepted
    r = recognize_half_square_girth(disjoint_union([a, Graph(1)]), 10)
    assert r.accepted and half_square(r.witness) == disjoint_union([a, Graph(1)])
    t = recognize_tree_witness(disjoint_union([Graph.complete(3), Graph.path(3)]))
    assert t.accepted


def test_every_report_revalidates_on_random_graphs():
    rng = random.Random(72)
    for _ in range(400):
        g = random_graph(rng.randint(1, 14), rng.choice([0.1, 0.2, 0.4]), rng)
        for mode in Mode:
            for girth_min in ((None,) if mode is Mode.TREE else (8, 10, 12)):
                r = recognize(g, mode, girth_min)
                assert report_problem(r, g) is None
                if r.accepted and mode is Mode.MAP_WITNESS and g.n >= 3:
                    assert r.witness.point_count <= 3 * g.n - 6 or g.m == 0


def test_map_witness_size_bound_on_planar_inputs():
    rng = random.Random(73)
    for _ in range(100):
        g = random_connected_planar(rng.randint(3, 40), rng, keep=0.5)
        r = recognize_map_witness_girth(g, 8)
        if r.accepted:
            assert r.witness.point_count <= 3 * g.n - 6


def test_forged_reports_are_caught():
    g = Graph.cycle(5)
    good = recognize_map_witness_girth(g, 10)
    forged = dataclasses.replace(good, witness=build_vertex_clique_incidence(Graph.cycle(5)).without_points([0]))
    assert report_problem(forged, g) is not None
    too_strong = dataclasses.replace(good, girth_parameter=12)
    assert report_problem(too_strong, g) is not None
    with pytest.raises(SoundnessError):
        _finish(forged, g, _Timer())
    no = recognize_half_square_girth(Graph.cycle(6), 14)
    assert report_problem(dataclasses.replace(no, girth_parameter=8), Graph.cycle(6)) is not None


def test_summary_is_deterministic_without_timings(dfp):
    g, labels = dfp
    a = recognize_map_witness_girth(g, 8).summary(timings=False, labels=labels)
    b = recognize_map_witness_girth(g, 8).summary(timings=False, labels=labels)
    assert a == b and "timings" not in a
    assert "timings:" in recognize_map_witness_girth(g, 8).summary()


def test_stats():
    r = recognize_map_witness_girth(Graph.cycle(5), 10)
    assert r.stats["cliques"] == 5 and r.stats["bg_points"] == 5 and r.stats["bg_edges"] == 10
    assert set(r.stats["timings"]) >= {"diamond", "c4", "cliques", "incidence", "girth", "planarity", "validate"}


@pytest.mark.parametrize("make", [subdivided_triangulation, truncated_prism])
def test_medium_scale_instances(make):
    g = make(5000)
    for girth_min in (8, 10):
        r = recognize_map_witness_girth(g, girth_min)
        assert r.accepted
    assert nx.is_planar(nx.Graph(list(g.edges())))
