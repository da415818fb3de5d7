from fractions import Fraction
from math import ceil

import pytest

from chordcycles.enumerate import graph_classes, labeled_trees
from chordcycles.errors import ChordedInputError, PreconditionError, SoundnessError
from chordcycles.families import gen_g1, gen_g2
from chordcycles.graph import (
    Graph,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    disjoint_union,
    path_graph,
    star_graph,
)
from chordcycles.low_degree import (
    LowDegreeIndependentSet,
    nonchorded_independent_low_degree,
    tree_independent_low_degree,
    tree_low_degree_vertices,
    validate_low_degree_set,
)


def test_tree_low_degree_examples():
    assert tree_low_degree_vertices(path_graph(4)) == (0, 1, 2, 3)
    assert tree_low_degree_vertices(star_graph(5)) == (1, 2, 3, 4, 5)


def test_tree_independent_examples():
    p4 = tree_independent_low_degree(path_graph(4))
    assert p4.vertices == (0, 2)
    assert p4.guarantee == 1
    star = tree_independent_low_degree(star_graph(5))
    assert star.vertices == (1, 2, 3, 4, 5)
    assert star.guarantee == Fraction(6, 4)


def test_tree_rejects_non_trees():
    with pytest.raises(PreconditionError):
        tree_low_degree_vertices(cycle_graph(4))
    with pytest.raises(PreconditionError):
        tree_independent_low_degree(Graph(1))
    with pytest.raises(PreconditionError):
        tree_independent_low_degree(Graph(4, [(0, 1), (2, 3)]))


@pytest.mark.parametrize("n", range(2, 8))
def test_trees_exhaustive(n):
    for t in labeled_trees(n):
        low = tree_low_degree_vertices(t)
        assert len(low) >= Fraction(n, 2) + 1
        res = tree_independent_low_degree(t)
        assert len(res.vertices) >= Fraction(n, 4)


def test_nonchorded_examples():
    c6 = nonchorded_independent_low_degree(cycle_graph(6))
    assert c6.vertices == (0, 2, 4)
    k23 = nonchorded_independent_low_degree(complete_bipartite(2, 3))
    assert k23.vertices == (2, 3, 4)
    g1 = nonchorded_independent_low_degree(gen_g1(2))
    assert len(g1.vertices) >= 4
    assert g1.guarantee == 1


def test_nonchorded_rejects_chorded():
    with pytest.raises(ChordedInputError):
        nonchorded_independent_low_degree(complete_graph(4))


def test_disconnected_input_handled_per_component():
    g = disjoint_union(cycle_graph(5), path_graph(3), Graph(1), complete_bipartite(2, 3))
    res = nonchorded_independent_low_degree(g)
    validate_low_degree_set(g, res)
    assert res.guarantee == Fraction(g.n, 12)
    assert 13 in res.vertices  # the isolated vertex


def test_json_shape():
    obj = nonchorded_independent_low_degree(cycle_graph(6)).to_json()
    assert obj == {"I": [0, 2, 4], "S": [0, 1, 2, 3, 4, 5], "guarantee_num": 1, "guarantee_den": 2}


def test_validator_catches_bad_sets():
    g = cycle_graph(6)
    with pytest.raises(SoundnessError):
        validate_low_degree_set(g, LowDegreeIndependentSet((0, 1), 6, Fraction(1, 2), tuple(range(6))))
    with pytest.raises(SoundnessError):
        validate_low_degree_set(g, LowDegreeIndependentSet((), 6, Fraction(1, 2), tuple(range(6))))
    k = complete_bipartite(3, 3)
    with pytest.raises(SoundnessError):
        validate_low_degree_set(k, LowDegreeIndependentSet((0,), 6, Fraction(0), (0,)))


@pytest.mark.parametrize("n", range(1, 10))
def test_connected_classes(n):
    for g in graph_classes(n, "non_chorded_connected"):
        res = nonchorded_independent_low_degree(g)
        assert len(res.vertices) >= ceil(Fraction(n, 12))
        if g.m >= g.n:
            assert len(res.s_set) >= Fraction(n, 6)
            low = [v for v in range(n) if g.degree(v) <= 2]
            sub, _ = g.induced(low)
            assert sub.is_forest() or all(d == 2 for d in g.degrees())


def test_g2_family():
    for r in range(4):
        g = gen_g2(r)
        res = nonchorded_independent_low_degree(g)
        validate_low_degree_set(g, res)
