"""Extremal constructions and the n/6 conjecture explorer.

Vertex numbering of every generator is fixed so serialized output is
byte-stable:

* ``gen_sharpness_bipartite(k, n)``: the small side is ``0..3k-2``.
* ``gen_g1(k)``: vertex ``x_i`` of copy ``j`` (both 1-based) is ``6(j-1) + i - 1``.
* ``gen_g2(rounds)``: the start triangle is ``0, 1, 2``; each round visits
  the degree-2 vertices in increasing order and appends a triangle
  ``(a, a+1, a+2)`` joined to the visited vertex through ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .chordality import require_non_chorded
from .enumerate import MAX_ENUMERATION_N, graph_classes
from .errors import BudgetExceededError, PreconditionError, SoundnessError
from .graph import Graph, bits, complete_bipartite, serialize_graph
from .low_degree import nonchorded_independent_low_degree

MAX_G2_ROUNDS = 4
DEFAULT_MIS_BUDGET = 10**6


def gen_sharpness_bipartite(k: int, n: int) -> Graph:
    """``K_{3k-1, n-3k+1}``: degree sums meet ``t(3k-1)`` yet ``k`` disjoint
    chorded cycles do not fit."""
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if n < 3 * k:
        raise PreconditionError(f"n must be at least 3k = {3 * k}")
    return complete_bipartite(3 * k - 1, n - 3 * k + 1)


def gen_g1(k: int) -> Graph:
    """``k`` copies of a 5-cycle plus a vertex on two of its non-adjacent
    vertices, chained by single edges."""
    if k < 1:
        raise PreconditionError("k must be at least 1")
    edges = []
    for j in range(k):
        x = [6 * j + i for i in range(6)]
        edges += [(x[i], x[(i + 1) % 5]) for i in range(5)]
        edges += [(x[1], x[5]), (x[4], x[5])]
        if j + 1 < k:
            edges.append((x[5], 6 * (j + 1)))
    return Graph(6 * k, edges)


def gen_g2(rounds: int) -> Graph:
    """Start from a triangle; each round hangs a fresh triangle by one edge
    off every vertex that currently has degree 2."""
    if rounds < 0:
        raise PreconditionError("rounds must be non-negative")
    if rounds > MAX_G2_ROUNDS:
        raise BudgetExceededError(f"rounds capped at {MAX_G2_ROUNDS}")
    n = 3
    edges = [(0, 1), (1, 2), (0, 2)]
    degree = [2, 2, 2]
    for _ in range(rounds):
        for v in [v for v in range(n) if degree[v] == 2]:
            a = n
            edges += [(v, a), (a, a + 1), (a + 1, a + 2), (a, a + 2)]
            degree[v] += 1
            degree += [3, 2, 2]
            n += 3
    return Graph(n, edges)


def g2_order(rounds: int) -> int:
    return 3 + 9 * (2**rounds - 1)


# -- exact low-degree independent set ----------------------------------------


def max_independent_subset(
    masks: Sequence[int], candidates: int, budget: int = DEFAULT_MIS_BUDGET
) -> int:
    """Bitmask of a maximum independent set inside ``candidates``.

    Branches on the lowest candidate (take it or drop it) with the bound
    ``|chosen| + |remaining|``; among maxima the first found wins, which
    favours lower vertex ids.
    """
    best = 0
    nodes = 0

    def rec(rest: int, chosen: int) -> None:
        nonlocal best, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(f"independent set search exceeded {budget} nodes")
        if chosen.bit_count() + rest.bit_count() <= best.bit_count():
            return
        if not rest:
            best = chosen
            return
        v = (rest & -rest).bit_length() - 1
        rec(rest & ~(1 << v) & ~masks[v], chosen | (1 << v))
        rec(rest & ~(1 << v), chosen)

    rec(candidates, 0)
    return best


def max_low_degree_independent(g: Graph, budget: int = DEFAULT_MIS_BUDGET) -> tuple[int, ...]:
    """A maximum independent set among vertices of degree at most 2."""
    low = 0
    for v in range(g.n):
        if g.masks[v].bit_count() <= 2:
            low |= 1 << v
    return tuple(bits(max_independent_subset(g.masks, low, budget)))


# -- conjecture sweep --------------------------------------------------------


@dataclass
class ConjectureReport:
    max_n: int
    graphs_checked: int = 0
    min_ratio: Fraction | None = None
    witnesses: list[Graph] = field(default_factory=list)
    violations: list[Graph] = field(default_factory=list)
    min_ratio_by_n: dict[int, Fraction] = field(default_factory=dict)
    lemma2_checked: int = 0

    def to_json(self) -> dict:
        def frac(x):
            return None if x is None else {"num": x.numerator, "den": x.denominator}

        return {
            "max_n": self.max_n,
            "graphs_checked": self.graphs_checked,
            "lemma2_checked": self.lemma2_checked,
            "min_ratio": frac(self.min_ratio),
            "min_ratio_by_n": {str(n): frac(r) for n, r in sorted(self.min_ratio_by_n.items())},
            "witnesses": [serialize_graph(g) for g in self.witnesses],
            "violations": [serialize_graph(g) for g in self.violations],
        }


def conjecture_sweep(max_n: int, min_n: int = 1) -> ConjectureReport:
    """Best low-degree independent ratio over connected non-chorded graphs.

    One representative per isomorphism class is visited, in order of
    ``n`` then adjacency bitstring. Every graph is also run through the
    guaranteed ``n/12`` extractor.
    """
    if max_n > MAX_ENUMERATION_N:
        raise BudgetExceededError(f"sweep is capped at n <= {MAX_ENUMERATION_N}")
    report = ConjectureReport(max_n)
    sixth = Fraction(1, 6)
    for n in range(max(min_n, 1), max_n + 1):
        for g in graph_classes(n, "non_chorded_connected"):
            size = len(max_low_degree_independent(g))
            ratio = Fraction(size, n)
            nonchorded_independent_low_degree(g)
            report.lemma2_checked += 1
            report.graphs_checked += 1
            if ratio < sixth:
                report.violations.append(g)
            if n not in report.min_ratio_by_n or ratio < report.min_ratio_by_n[n]:
                report.min_ratio_by_n[n] = ratio
            if report.min_ratio is None or ratio < report.min_ratio:
                report.min_ratio = ratio
                report.witnesses = [g]
            elif ratio == report.min_ratio:
                report.witnesses.append(g)
    return report


def check_generator(g: Graph) -> None:
    """Generator outputs must be connected and non-chorded."""
    if not g.is_connected():
        raise SoundnessError("generator output is disconnected", g)
    require_non_chorded(g, "generator output")
