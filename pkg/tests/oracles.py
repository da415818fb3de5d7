"""Deliberately naive reference implementations used only by the tests."""

from __future__ import annotations

from itertools import combinations, permutations

import networkx as nx

from chordcycles.graph import Graph


def all_cycles(g: Graph):
    """Every cycle as a vertex tuple, once per cycle (rotation/reflection fixed)."""
    out = []
    for size in range(3, g.n + 1):
        for vs in combinations(range(g.n), size):
            first, rest = vs[0], vs[1:]
            for perm in permutations(rest):
                if perm[0] > perm[-1]:
                    continue
                cyc = (first,) + perm
                if all(g.has_edge(cyc[i], cyc[(i + 1) % size]) for i in range(size)):
                    out.append(cyc)
    return out


def chords_of(g: Graph, cyc) -> list[tuple[int, int]]:
    k = len(cyc)
    out = []
    for i, j in combinations(range(k), 2):
        if j - i in (1, k - 1):
            continue
        if g.has_edge(cyc[i], cyc[j]):
            out.append(tuple(sorted((cyc[i], cyc[j]))))
    return sorted(out)


def chorded_vertex_sets(g: Graph) -> set[frozenset]:
    return {frozenset(c) for c in all_cycles(g) if chords_of(g, c)}


def max_packing_naive(g: Graph) -> int:
    sets = sorted(chorded_vertex_sets(g), key=len)

    def best(i, used):
        top = 0
        for j in range(i, len(sets)):
            if not (sets[j] & used):
                top = max(top, 1 + best(j + 1, used | sets[j]))
        return top

    return best(0, frozenset())


def min_total_naive(g: Graph, k: int) -> int | None:
    sets = sorted(chorded_vertex_sets(g), key=len)
    best = None
    for combo in combinations(sets, k):
        union = frozenset().union(*combo)
        if len(union) == sum(len(s) for s in combo):
            if best is None or len(union) < best:
                best = len(union)
    return best


def sigma_naive(g: Graph, t: int):
    best = None
    for vs in combinations(range(g.n), t):
        if any(g.has_edge(u, v) for u, v in combinations(vs, 2)):
            continue
        s = sum(g.degree(v) for v in vs)
        best = s if best is None else min(best, s)
    return float("inf") if best is None else best


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h
