import math

import pytest

from chordcycles.chordality import CycleWithChords
from chordcycles.enumerate import enumerate_graphs, graph_classes
from chordcycles.errors import BudgetExceededError, NoPackingError, PreconditionError, SoundnessError
from chordcycles.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    petersen_graph,
)
from chordcycles.packing import (
    EXHAUSTED,
    FOUND,
    INCONCLUSIVE,
    INFINITY,
    Packing,
    check_hypothesis,
    check_prior_theorems,
    chords_cross,
    is_valid_packing,
    max_packing,
    minimal_packing,
    minimal_packing_properties,
    sigma,
    verify_packing,
)
from conftest import random_graph
from oracles import max_packing_naive, min_total_naive, sigma_naive


def test_sigma_examples():
    assert sigma(complete_graph(4), 2).value == INFINITY
    assert sigma(complete_graph(4), 2).witness is None
    c5 = sigma(cycle_graph(5), 2)
    assert c5.value == 4 and c5.witness == (0, 2)
    assert sigma(complete_bipartite(5, 7), 2).value == 10


def test_sigma_infinity_is_distinct():
    stat = sigma(Graph(2), 3)
    assert stat.is_infinite and stat.value == math.inf
    assert stat.to_json()["value"] == "infinity"
    assert sigma(Graph(3), 3).value == 0


def test_sigma_budget():
    with pytest.raises(BudgetExceededError):
        sigma(cycle_graph(20), 5, budget=3)
    with pytest.raises(ValueError):
        sigma(cycle_graph(4), 0)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_sigma_exhaustive(n):
    for g in enumerate_graphs(n):
        for t in (1, 2, 3):
            stat = sigma(g, t)
            assert stat.value == sigma_naive(g, t)
            if stat.witness is not None:
                assert sum(g.degree(v) for v in stat.witness) == stat.value


def test_sigma_random_larger(rng):
    for _ in range(100):
        g = random_graph(rng, rng.randint(8, 14), rng.uniform(0.1, 0.6))
        t = rng.randint(1, 4)
        assert sigma(g, t).value == sigma_naive(g, t)


def test_max_packing_examples():
    r = max_packing(complete_graph(8), 2)
    assert r.status == FOUND and len(r.packing) == 2
    verify_packing(complete_graph(8), r.packing)
    r = max_packing(complete_bipartite(5, 5), 2)
    assert (r.status, r.max_found) == (EXHAUSTED, 1)
    assert r.packing is None
    r = max_packing(cycle_graph(7), 1)
    assert (r.status, r.max_found) == (EXHAUSTED, 0)


def test_max_packing_json():
    obj = max_packing(complete_bipartite(5, 5), 2).to_json()
    assert obj["status"] == "exhausted" and obj["k"] == 2 and obj["max_found"] == 1
    assert obj["total_vertices"] == sum(len(c["cycle"]) for c in obj["cycles"])


def test_max_packing_inconclusive():
    r = max_packing(complete_bipartite(6, 9), 3, budget=5)
    assert r.status == INCONCLUSIVE
    verify_packing(complete_bipartite(6, 9), r.best)


def test_max_packing_budget_env(monkeypatch):
    monkeypatch.setenv("CHORDCYCLES_BUDGET", "3")
    assert max_packing(complete_bipartite(6, 9), 3).status == INCONCLUSIVE


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_max_packing_against_naive_oracle(n):
    for g in graph_classes(n):
        expect = max_packing_naive(g)
        r = max_packing(g, expect + 1)
        assert r.status == EXHAUSTED and r.max_found == expect
        if expect:
            assert max_packing(g, expect).status == FOUND


def test_monotone_under_edge_addition(rng):
    for _ in range(150):
        g = random_graph(rng, 7, rng.uniform(0.3, 0.8))
        missing = [(u, v) for u in range(7) for v in range(u + 1, 7) if not g.has_edge(u, v)]
        if not missing:
            continue
        h = Graph(7, list(g.edges) + [rng.choice(missing)])
        before = max_packing(g, 3).max_found
        after = max_packing(h, 3).max_found
        assert after >= before


def test_minimal_packing_examples():
    assert minimal_packing(complete_graph(8), 2).total_vertices == 8
    two_k4 = disjoint_union(complete_graph(4), complete_graph(4))
    p = minimal_packing(two_k4, 2)
    assert [sorted(c.cycle) for c in p.cycles] == [[0, 1, 2, 3], [4, 5, 6, 7]]
    assert minimal_packing(complete_graph(9), 2).total_vertices == 8
    with pytest.raises(NoPackingError):
        minimal_packing(complete_bipartite(5, 5), 2)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_minimal_packing_against_naive(n):
    for g in graph_classes(n)[::3]:
        for k in (1, 2):
            expect = min_total_naive(g, k)
            if expect is None:
                with pytest.raises(NoPackingError):
                    minimal_packing(g, k)
            else:
                assert minimal_packing(g, k).total_vertices == expect


def test_minimal_packing_tiebreakers():
    g = disjoint_union(complete_graph(4), complete_graph(5))
    plain = minimal_packing(g, 1)
    k4 = minimal_packing(g, 1, most_k4=True)
    assert plain.total_vertices == k4.total_vertices == 4
    comps = minimal_packing(g, 1, fewest_components=True)
    assert comps.total_vertices == 4


def test_minimal_packing_deterministic():
    g = petersen_graph()
    assert minimal_packing(g, 1) == minimal_packing(g, 1)


def test_properties_examples():
    p = minimal_packing(complete_graph(8), 2)
    report = minimal_packing_properties(complete_graph(8), p)
    assert report.outside_degrees == ()
    g = complete_graph(9)
    report = minimal_packing_properties(g, minimal_packing(g, 2))
    assert [d for _, _, d in report.outside_degrees] == [4, 4]


def test_properties_reject_non_minimal():
    g = complete_graph(6)
    big = Packing((CycleWithChords((0, 1, 2, 3, 4), ((0, 2), (0, 3), (1, 3), (1, 4), (2, 4))),))
    with pytest.raises(PreconditionError):
        minimal_packing_properties(g, big)


def test_chords_cross():
    cyc = (0, 1, 2, 3, 4, 5, 6)
    assert chords_cross(cyc, (0, 3), (1, 5))
    assert not chords_cross(cyc, (0, 3), (4, 6))
    assert not chords_cross(cyc, (0, 3), (0, 5))


def test_verify_packing_rejects_overlap():
    g = complete_graph(7)
    c1 = CycleWithChords((0, 1, 2, 3), ((0, 2), (1, 3)))
    c2 = CycleWithChords((3, 4, 5, 6), ((3, 5), (4, 6)))
    bad = Packing((c1, c2))
    assert not is_valid_packing(g, bad)
    with pytest.raises(SoundnessError):
        verify_packing(g, bad)


def test_hypothesis_thresholds():
    t1 = check_hypothesis(None, 1, 1)
    assert (t1.order_threshold, t1.degree_threshold) == (25, 3)
    t5 = check_hypothesis(None, 2, 5)
    assert (t5.order_threshold, t5.degree_threshold) == (122, 26)
    t2 = check_hypothesis(37, 1, 2, 5)
    assert (t2.order_threshold, t2.degree_threshold, t2.order_ok, t2.degree_ok) == (37, 5, True, True)
    t2 = check_hypothesis(36, 1, 2, 4)
    assert (t2.order_ok, t2.degree_ok) == (False, False)
    assert check_hypothesis(40, 1, 2, INFINITY).degree_ok
    with pytest.raises(ValueError):
        check_hypothesis(10, 0, 1)


def test_prior_theorems():
    rep = check_prior_theorems(complete_graph(8), 2)
    assert rep["theorem1"]["status"] == FOUND
    assert check_prior_theorems(cycle_graph(9), 1) == {}


def test_prior_theorems_random_min_degree_three(rng):
    hits = 0
    while hits < 20:
        g = random_graph(rng, 10, 0.5)
        if g.min_degree() < 3:
            continue
        hits += 1
        rep = check_prior_theorems(g, 1)
        assert rep["theorem1"]["status"] == FOUND
