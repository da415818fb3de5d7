import random

import networkx as nx
import pytest

from chordcycles.enumerate import (
    enumerate_graphs,
    graph_classes,
    has_chorded_cycle,
    is_biconnected,
    labeled_trees,
)
from chordcycles.errors import (
    BudgetExceededError,
    DuplicateEdgeError,
    EdgeCountMismatchError,
    MalformedEdgeError,
    MalformedHeaderError,
    PreconditionError,
    SelfLoopError,
    VertexRangeError,
)
from chordcycles.families import gen_g1
from chordcycles.graph import (
    DenseCoreWitness,
    Graph,
    VertexOrdering,
    back_degrees,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    degeneracy_ordering,
    is_proper_coloring,
    parse_graph,
    serialize_graph,
    tripartition,
)
from conftest import random_graph
from oracles import to_nx


def test_parse_cycle():
    g = parse_graph("4 4\n0 1\n1 2\n2 3\n3 0")
    assert g == cycle_graph(4)
    assert g.degrees() == [2, 2, 2, 2]


def test_parse_isolated_vertex():
    g = parse_graph("1 0")
    assert g.n == 1 and g.m == 0


def test_parse_comments_and_blank_lines():
    g = parse_graph("# header comment\n3 2\n\n0 1\n# mid\n1 2\n")
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "text, error",
    [
        ("3 3\n0 1\n1 2\n0 1", DuplicateEdgeError),
        ("3 3\n0 1\n1 2\n1 0", DuplicateEdgeError),
        ("3 1\n1 1", SelfLoopError),
        ("3 1\n0 3", VertexRangeError),
        ("3 1\n-1 0", VertexRangeError),
        ("3", MalformedHeaderError),
        ("a b", MalformedHeaderError),
        ("", MalformedHeaderError),
        ("3 2\n0 1", EdgeCountMismatchError),
        ("3 1\n0 1 2", MalformedEdgeError),
        ("3 1\n0 x", MalformedEdgeError),
    ],
)
def test_parse_errors(text, error):
    with pytest.raises(error):
        parse_graph(text)


def test_parse_errors_are_distinct():
    from chordcycles.errors import GraphParseError

    kinds = [DuplicateEdgeError, SelfLoopError, VertexRangeError, MalformedHeaderError,
             MalformedEdgeError, EdgeCountMismatchError]
    assert all(issubclass(k, GraphParseError) for k in kinds)
    assert not any(issubclass(a, b) for a in kinds for b in kinds if a is not b)


def test_serialize_round_trip(rng):
    for _ in range(200):
        g = random_graph(rng, rng.randint(0, 12), rng.random())
        text = serialize_graph(g)
        assert parse_graph(text) == g
        assert serialize_graph(parse_graph(text)) == text


def test_serialize_sorted():
    g = Graph(4, [(3, 2), (1, 0), (0, 3)])
    assert serialize_graph(g) == "4 3\n0 1\n0 3\n2 3\n"


def test_constructor_rejects_bad_edges():
    with pytest.raises(ValueError):
        Graph(2, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        Graph(2, [(0, 2)])


def test_graph_invariants(rng):
    for _ in range(100):
        g = random_graph(rng, 9, 0.4)
        assert sum(g.degrees()) == 2 * g.m
        for u in range(g.n):
            for v in g.adj[u]:
                assert u in g.adj[v]


def test_enumerate_counts_small():
    assert sum(1 for _ in enumerate_graphs(3)) == 8
    assert sum(1 for _ in enumerate_graphs(3, "connected")) == 4


def test_enumerate_is_lexicographic():
    codes = [g.edge_bitstring() for g in enumerate_graphs(4)]
    assert codes == list(range(64))
    nc = [g.edge_bitstring() for g in enumerate_graphs(5, "non_chorded")]
    assert nc == sorted(nc)


def test_enumerate_non_chorded_matches_filter():
    from chordcycles.chordality import is_non_chorded_bruteforce

    expected = [g for g in enumerate_graphs(4) if is_non_chorded_bruteforce(g)]
    got = list(enumerate_graphs(4, "non_chorded"))
    assert got == expected
    # only K4 minus at most one edge contains a chorded 4-cycle on 4 vertices
    assert len(got) == 64 - 7


@pytest.mark.parametrize("n", [4, 5, 6])
def test_enumerate_filters_against_brute_force(n):
    from chordcycles.chordality import is_non_chorded_bruteforce

    everything = list(enumerate_graphs(n))
    nc = [g for g in everything if is_non_chorded_bruteforce(g)]
    assert list(enumerate_graphs(n, "non_chorded")) == nc
    assert list(enumerate_graphs(n, "non_chorded_connected")) == [g for g in nc if g.is_connected()]
    assert list(enumerate_graphs(n, "non_chorded_biconnected")) == [g for g in nc if is_biconnected(g)]
    assert list(enumerate_graphs(n, "connected")) == [g for g in everything if g.is_connected()]


def test_enumerate_cap():
    with pytest.raises(BudgetExceededError):
        next(enumerate_graphs(10))
    with pytest.raises(ValueError):
        next(enumerate_graphs(3, "bogus"))


def test_labeled_tree_count():
    for n in range(2, 7):
        trees = list(labeled_trees(n))
        assert len(trees) == n ** (n - 2)
        assert len(set(trees)) == len(trees)
        assert all(t.is_tree() for t in trees)


def test_class_counts_match_known_sequences():
    # graphs and connected graphs up to isomorphism
    assert [len(graph_classes(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    assert [len(graph_classes(n, "connected")) for n in range(1, 8)] == [1, 1, 2, 6, 21, 112, 853]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_class_counts_match_labeled_orbits(n):
    for filt in ("non_chorded", "non_chorded_connected", "non_chorded_biconnected"):
        labeled = list(enumerate_graphs(n, filt))
        classes = graph_classes(n, filt)
        reps = {}
        for g in labeled:
            reps.setdefault(nx.weisfeiler_lehman_graph_hash(to_nx(g)), []).append(g)
        # every labeled graph is isomorphic to exactly one representative
        total = 0
        for c in classes:
            h = to_nx(c)
            total += sum(
                1
                for g in reps.get(nx.weisfeiler_lehman_graph_hash(h), [])
                if nx.is_isomorphic(h, to_nx(g))
            )
        assert total == len(labeled)


def test_has_chorded_cycle_bitmask(rng):
    from chordcycles.chordality import find_chorded_cycle

    for _ in range(500):
        g = random_graph(rng, rng.randint(4, 9), rng.random() * 0.6)
        assert has_chorded_cycle(g.masks) == (find_chorded_cycle(g) is not None)


def test_degeneracy_cycle():
    o = degeneracy_ordering(cycle_graph(5))
    assert isinstance(o, VertexOrdering)
    assert o.max_back_degree == 2
    assert sorted(o.order) == list(range(5))


def test_degeneracy_k4_dense_core():
    assert degeneracy_ordering(complete_graph(4)) == DenseCoreWitness((0, 1, 2, 3))


def test_degeneracy_k23():
    o = degeneracy_ordering(complete_bipartite(2, 3))
    assert o.max_back_degree <= 2
    assert o.max_back_degree == max(back_degrees(complete_bipartite(2, 3), o.order))


def test_degeneracy_matches_networkx_core_number(rng):
    for _ in range(200):
        g = random_graph(rng, 10, rng.random() * 0.6)
        core = max(nx.core_number(to_nx(g)).values(), default=0)
        o = degeneracy_ordering(g)
        assert isinstance(o, DenseCoreWitness) == (core >= 3)
        if isinstance(o, DenseCoreWitness):
            sub, _ = g.induced(o.vertices)
            assert sub.min_degree() >= 3


def test_tripartition_examples():
    c5 = tripartition(cycle_graph(5))
    assert is_proper_coloring(cycle_graph(5), c5.color)
    assert len(set(c5.color)) == 3
    c4 = tripartition(cycle_graph(4))
    assert is_proper_coloring(cycle_graph(4), c4.color)
    g1 = gen_g1(2)
    t = tripartition(g1)
    assert is_proper_coloring(g1, t.color) and set(t.color) <= {0, 1, 2}


def test_tripartition_rejects_dense_core():
    with pytest.raises(PreconditionError):
        tripartition(complete_graph(4))


def test_tripartition_deterministic():
    g = random_graph(random.Random(3), 12, 0.2)
    if isinstance(degeneracy_ordering(g), VertexOrdering):
        assert tripartition(g) == tripartition(g)
