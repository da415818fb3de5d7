"""Independent sets of low-degree vertices with guaranteed size.

Trees give ``|I| >= n/4`` and non-chorded graphs ``|I| >= n/12``, where
every vertex of ``I`` has degree at most 2 in the host graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil
from typing import Iterable, Sequence

from .chordality import require_non_chorded
from .errors import PreconditionError, SoundnessError
from .graph import Graph, bits


@dataclass(frozen=True)
class LowDegreeIndependentSet:
    vertices: tuple[int, ...]
    host_n: int
    guarantee: Fraction
    s_set: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "I": list(self.vertices),
            "S": list(self.s_set),
            "guarantee_num": self.guarantee.numerator,
            "guarantee_den": self.guarantee.denominator,
        }


def validate_low_degree_set(g: Graph, s: LowDegreeIndependentSet) -> None:
    members = 0
    for v in s.vertices:
        members |= 1 << v
    for v in s.vertices:
        if g.masks[v] & members:
            raise SoundnessError(f"vertex {v} has a neighbor inside I", s)
        if g.degree(v) > 2:
            raise SoundnessError(f"vertex {v} of I has degree {g.degree(v)}", s)
    if not set(s.vertices) <= set(s.s_set):
        raise SoundnessError("I is not drawn from S", s)
    if any(g.degree(v) > 2 for v in s.s_set):
        raise SoundnessError("S contains a vertex of degree > 2", s)
    if len(s.vertices) < ceil(s.guarantee):
        raise SoundnessError(f"|I| = {len(s.vertices)} < ceil({s.guarantee})", s)


def _larger_class(masks: Sequence[int], vertices: Iterable[int]) -> list[int]:
    """Two-color each tree of the forest induced on ``vertices`` and keep the
    larger side of each (ties: the side holding the tree's smallest id)."""
    allowed = 0
    for v in vertices:
        allowed |= 1 << v
    chosen = []
    seen = 0
    for root in bits(allowed):
        if (seen >> root) & 1:
            continue
        sides: list[list[int]] = [[], []]
        frontier = [root]
        seen |= 1 << root
        side = 0
        while frontier:
            sides[side].extend(frontier)
            nxt = []
            for v in frontier:
                for w in bits(masks[v] & allowed & ~seen):
                    seen |= 1 << w
                    nxt.append(w)
            frontier = nxt
            side ^= 1
        chosen.extend(sides[0] if len(sides[0]) >= len(sides[1]) else sides[1])
    return sorted(chosen)


def _require_tree(t: Graph) -> None:
    if t.n < 2 or not t.is_tree():
        raise PreconditionError("input must be a tree on at least 2 vertices")


def tree_low_degree_vertices(t: Graph) -> tuple[int, ...]:
    """Leaves and stems of a tree; there are at least ``n/2 + 1`` of them."""
    _require_tree(t)
    return tuple(v for v in range(t.n) if t.degree(v) <= 2)


def tree_independent_low_degree(t: Graph) -> LowDegreeIndependentSet:
    _require_tree(t)
    low = tree_low_degree_vertices(t)
    color = _bipartition(t)
    sides = [[v for v in low if color[v] == c] for c in (0, 1)]
    # vertex 0 is always colored 0, so ties keep the side holding it
    pick = sides[0] if len(sides[0]) >= len(sides[1]) else sides[1]
    result = LowDegreeIndependentSet(tuple(pick), t.n, Fraction(t.n, 4), low)
    validate_low_degree_set(t, result)
    return result


def _bipartition(t: Graph) -> list[int]:
    color = [-1] * t.n
    color[0] = 0
    stack = [0]
    while stack:
        v = stack.pop()
        for w in t.adj[v]:
            if color[w] == -1:
                color[w] = color[v] ^ 1
                stack.append(w)
    return color


def nonchorded_independent_low_degree(h: Graph) -> LowDegreeIndependentSet:
    """Guaranteed ``n/12`` extractor, applied component by component.

    Acyclic components use the tree routine (isolated vertices are taken
    outright), a component that is a single cycle contributes alternate
    vertices, and any other component contributes the larger side of each
    tree of the forest induced on its degree-<=2 vertices. Every cyclic
    component is also checked to have at least ``|component|/6`` such
    vertices.
    """
    require_non_chorded(h)
    masks = h.masks
    chosen: list[int] = []
    s_set: list[int] = []
    for comp in h.components():
        size = len(comp)
        edges = sum(masks[v].bit_count() for v in comp) // 2
        low = [v for v in comp if masks[v].bit_count() <= 2]
        s_set.extend(low)
        if size == 1:
            chosen.extend(comp)
        elif edges == size - 1:
            sub, labels = h.induced(comp)
            part = tree_independent_low_degree(sub)
            chosen.extend(labels[v] for v in part.vertices)
        elif len(low) == size:
            # connected, every degree 2: a single cycle
            order = _cycle_order(masks, comp[0])
            chosen.extend(order[0 : 2 * (size // 2) : 2])
        else:
            if len(low) < Fraction(size, 6):
                raise SoundnessError(
                    f"cyclic component with {size} vertices has only {len(low)} low-degree vertices",
                    comp,
                )
            chosen.extend(_larger_class(masks, low))
    result = LowDegreeIndependentSet(
        tuple(sorted(chosen)), h.n, Fraction(h.n, 12), tuple(sorted(s_set))
    )
    validate_low_degree_set(h, result)
    return result


def _cycle_order(masks: Sequence[int], start: int) -> list[int]:
    order = [start]
    prev = -1
    v = start
    while True:
        w = next(x for x in bits(masks[v]) if x != prev)
        if w == start:
            return order
        order.append(w)
        prev, v = v, w
