"""Degree sums of independent sets and exact chorded-cycle packing.

Packings are searched over inclusion-minimal chorded vertex sets (see
:func:`chordality.minimal_chorded_sets`): any packing can be shrunk onto
such sets without losing a cycle, so maximum packing size and minimum
total order are unaffected by the restriction.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from typing import Sequence

from .chordality import (
    CycleWithChords,
    cycles_vertex_disjoint,
    is_valid_cycle,
    minimal_chorded_sets,
    spanning_chorded_cycle,
    validate_cycle,
)
from .errors import BudgetExceededError, NoPackingError, PreconditionError, SoundnessError
from .graph import Graph, bits

INFINITY = math.inf
DEFAULT_BUDGET = 10**7
BUDGET_ENV = "CHORDCYCLES_BUDGET"


def default_budget() -> int:
    value = os.environ.get(BUDGET_ENV)
    return int(value) if value else DEFAULT_BUDGET


# -- sigma_t -----------------------------------------------------------------


@dataclass(frozen=True)
class DegreeSumStat:
    t: int
    value: int | float
    witness: tuple[int, ...] | None

    @property
    def is_infinite(self) -> bool:
        return self.value == INFINITY

    def to_json(self) -> dict:
        return {
            "t": self.t,
            "value": "infinity" if self.is_infinite else self.value,
            "witness": None if self.witness is None else list(self.witness),
        }


def sigma(g: Graph, t: int, budget: int | None = None) -> DegreeSumStat:
    """Minimum degree sum over independent ``t``-sets (``INFINITY`` if none).

    Branch and bound over vertices sorted by degree: the next ``r`` unused
    degrees in that order bound any completion from below.
    """
    if t < 1:
        raise ValueError("t must be at least 1")
    if budget is None:
        budget = default_budget()
    n = g.n
    masks = g.masks
    order = sorted(range(n), key=lambda v: (masks[v].bit_count(), v))
    deg = [masks[v].bit_count() for v in order]
    best = INFINITY
    best_set: list[int] | None = None
    chosen: list[int] = []
    nodes = 0

    def rec(i: int, total: int, blocked: int) -> None:
        nonlocal best, best_set, nodes
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(f"sigma search exceeded {budget} nodes")
        r = t - len(chosen)
        if r == 0:
            if total < best:
                best, best_set = total, list(chosen)
            return
        for j in range(i, n - r + 1):
            if total + sum(deg[j : j + r]) >= best:
                return
            v = order[j]
            if (blocked >> v) & 1:
                continue
            chosen.append(v)
            rec(j + 1, total + deg[j], blocked | masks[v])
            chosen.pop()

    rec(0, 0, 0)
    if best_set is None:
        return DegreeSumStat(t, INFINITY, None)
    return DegreeSumStat(t, best, tuple(sorted(best_set)))


# -- packings ----------------------------------------------------------------


@dataclass(frozen=True)
class Packing:
    cycles: tuple[CycleWithChords, ...]

    @property
    def total_vertices(self) -> int:
        return sum(len(c) for c in self.cycles)

    def __len__(self):
        return len(self.cycles)

    def to_json(self) -> dict:
        return {
            "k": len(self.cycles),
            "cycles": [c.to_json() for c in self.cycles],
            "total_vertices": self.total_vertices,
        }


def verify_packing(g: Graph, p: Packing) -> None:
    """Raise :class:`SoundnessError` unless ``p`` is a valid packing in ``g``."""
    for c in p.cycles:
        validate_cycle(g, c)
    if not cycles_vertex_disjoint(p.cycles):
        raise SoundnessError("packing cycles share a vertex", p)


def is_valid_packing(g: Graph, p: Packing) -> bool:
    return cycles_vertex_disjoint(p.cycles) and all(is_valid_cycle(g, c) for c in p.cycles)


FOUND = "found"
EXHAUSTED = "exhausted"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class PackingResult:
    """Outcome of :func:`max_packing`.

    ``status`` is ``found`` when ``packing`` has ``k`` cycles, ``exhausted``
    when the full search proved ``max_found`` is the maximum (below ``k``),
    and ``inconclusive`` when the node budget ran out first; ``best`` is
    the largest packing seen in every case.
    """

    k: int
    status: str
    max_found: int
    best: Packing
    nodes: int

    @property
    def packing(self) -> Packing | None:
        return self.best if self.status == FOUND else None

    def to_json(self) -> dict:
        out = {
            "k": self.k,
            "cycles": [c.to_json() for c in self.best.cycles],
            "total_vertices": self.best.total_vertices,
            "status": self.status,
            "max_found": self.max_found,
        }
        return out


class _Budget(Exception):
    pass


@dataclass
class _Candidates:
    masks: list[int]
    by_min: list[list[int]] = field(default_factory=list)


def _candidates(g: Graph, max_size: int | None = None) -> _Candidates:
    sets = minimal_chorded_sets(g, max_size)
    by_min: list[list[int]] = [[] for _ in range(g.n)]
    for mask in sets:
        by_min[(mask & -mask).bit_length() - 1].append(mask)
    return _Candidates(sets, by_min)


def _to_packing(g: Graph, masks: Sequence[int]) -> Packing:
    cycles = tuple(spanning_chorded_cycle(g, m) for m in sorted(masks, key=_set_key))
    p = Packing(cycles)
    verify_packing(g, p)
    return p


def _set_key(mask: int):
    return (mask.bit_count(), tuple(bits(mask)))


def max_packing(g: Graph, k: int, budget: int | None = None) -> PackingResult:
    """Search for ``k`` vertex-disjoint chorded cycles.

    Vertices are decided in increasing order: vertex ``v`` is either left
    uncovered or covered by a candidate set whose smallest vertex is ``v``,
    so each packing is visited once. A branch is cut when even covering
    every free vertex with 4-vertex cycles could not beat the best count.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if budget is None:
        budget = default_budget()
    n = g.n
    cands = _candidates(g)
    best: list[int] = []
    chosen: list[int] = []
    nodes = 0
    exhausted = True

    def rec(v: int, used: int) -> bool:
        nonlocal nodes, best
        nodes += 1
        if nodes > budget:
            raise _Budget
        if len(chosen) > len(best):
            best = list(chosen)
            if len(best) >= k:
                return True
        free = n - v - (used >> v).bit_count() if v < n else 0
        if len(chosen) + free // 4 <= len(best) or v >= n:
            return False
        if (used >> v) & 1:
            return rec(v + 1, used)
        for mask in cands.by_min[v]:
            if mask & used:
                continue
            chosen.append(mask)
            done = rec(v + 1, used | mask)
            chosen.pop()
            if done:
                return True
        return rec(v + 1, used)

    try:
        if k > 0:
            rec(0, 0)
    except _Budget:
        exhausted = False
    packing = _to_packing(g, best)
    if len(best) >= k:
        status = FOUND
    else:
        status = EXHAUSTED if exhausted else INCONCLUSIVE
    return PackingResult(k, status, len(best), packing, nodes)


def _components_outside(g: Graph, used: int) -> int:
    rest = ((1 << g.n) - 1) & ~used
    count = 0
    while rest:
        s = (rest & -rest).bit_length() - 1
        seen = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.masks[v]
            frontier = nxt & rest & ~seen
            seen |= frontier
        rest &= ~seen
        count += 1
    return count


def _is_k4(g: Graph, mask: int) -> bool:
    return mask.bit_count() == 4 and all((g.masks[v] & mask).bit_count() == 3 for v in bits(mask))


def minimal_packing(
    g: Graph,
    k: int,
    fewest_components: bool = False,
    most_k4: bool = False,
    budget: int | None = None,
) -> Packing:
    """A packing of ``k`` chorded cycles with the fewest vertices in total.

    Optional tie-breakers, applied in this order after the vertex total:
    fewest components of the graph left after deleting the packing, then
    most cycles spanning a ``K_4``. Remaining ties go to the
    lexicographically least list of cycle vertex sets.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if budget is None:
        budget = default_budget()
    n = g.n
    cands = _candidates(g, max_size=n - 4 * (k - 1))
    best_key = None
    best_sets: list[int] | None = None
    chosen: list[int] = []
    nodes = 0

    def key_of(sets: list[int]):
        used = 0
        for m in sets:
            used |= m
        key = [used.bit_count()]
        if fewest_components:
            key.append(_components_outside(g, used))
        if most_k4:
            key.append(-sum(1 for m in sets if _is_k4(g, m)))
        key.append(sorted(_set_key(m) for m in sets))
        return key

    def rec(v: int, used: int, total: int) -> None:
        nonlocal nodes, best_key, best_sets
        nodes += 1
        if nodes > budget:
            raise BudgetExceededError(f"minimal packing search exceeded {budget} nodes")
        need = k - len(chosen)
        if need == 0:
            key = key_of(chosen)
            if best_key is None or key < best_key:
                best_key, best_sets = key, list(chosen)
            return
        if best_key is not None and total + 4 * need > best_key[0]:
            return
        free = n - v - (used >> v).bit_count() if v < n else 0
        if free < 4 * need:
            return
        if (used >> v) & 1:
            rec(v + 1, used, total)
            return
        for mask in cands.by_min[v]:
            if mask & used:
                continue
            chosen.append(mask)
            rec(v + 1, used | mask, total + mask.bit_count())
            chosen.pop()
        rec(v + 1, used, total)

    rec(0, 0, 0)
    if best_sets is None:
        raise NoPackingError(f"no packing of {k} vertex-disjoint chorded cycles")
    return _to_packing(g, best_sets)


# -- properties of minimal packings ------------------------------------------


def chords_cross(cycle: Sequence[int], c1: tuple[int, int], c2: tuple[int, int]) -> bool:
    pos = {v: i for i, v in enumerate(cycle)}
    a, b = sorted((pos[c1[0]], pos[c1[1]]))
    x, y = pos[c2[0]], pos[c2[1]]
    if len({a, b, x, y}) < 4:
        return False
    return (a < x < b) != (a < y < b)


@dataclass(frozen=True)
class MinimalPackingReport:
    long_cycles_checked: int
    outside_degrees: tuple[tuple[int, int, int], ...]  # (x, cycle index, deg_C(x))


def minimal_packing_properties(g: Graph, p: Packing) -> MinimalPackingReport:
    """Check the chord and outside-degree structure of a minimal packing.

    Cycles of length >= 7 carry at most two chords, and two chords must
    cross. A vertex ``x`` off the packing sends at most 4 edges to any
    cycle ``C``; 4 edges force ``|C| = 4`` and 3 edges force ``|C| <= 6``.
    """
    verify_packing(g, p)
    if not p.cycles:
        raise PreconditionError("empty packing")
    optimum = minimal_packing(g, len(p)).total_vertices
    if p.total_vertices != optimum:
        raise PreconditionError(
            f"packing uses {p.total_vertices} vertices but the minimum is {optimum}"
        )
    long_checked = 0
    for c in p.cycles:
        if len(c) >= 7:
            long_checked += 1
            if len(c.chords) > 2:
                raise SoundnessError(f"cycle of length {len(c)} has {len(c.chords)} chords", (g, p))
            if len(c.chords) == 2 and not chords_cross(c.cycle, *c.chords):
                raise SoundnessError("two chords that do not cross", (g, p))
    used = 0
    for c in p.cycles:
        used |= c.mask
    degrees = []
    for x in range(g.n):
        if (used >> x) & 1:
            continue
        for i, c in enumerate(p.cycles):
            d = (g.masks[x] & c.mask).bit_count()
            degrees.append((x, i, d))
            if d > 4 or (d == 4 and len(c) != 4) or (d == 3 and len(c) > 6):
                raise SoundnessError(
                    f"outside vertex {x} has {d} neighbors on a cycle of length {len(c)}", (g, p)
                )
    return MinimalPackingReport(long_checked, tuple(degrees))


# -- theorem hypotheses ------------------------------------------------------


@dataclass(frozen=True)
class TheoremInstance:
    n: int | None
    k: int
    t: int
    sigma_value: int | float | None
    order_threshold: int
    degree_threshold: int
    order_ok: bool | None
    degree_ok: bool | None

    def to_json(self) -> dict:
        sv = self.sigma_value
        return {
            "n": self.n,
            "k": self.k,
            "t": self.t,
            "sigma": "infinity" if sv == INFINITY else sv,
            "order_threshold": self.order_threshold,
            "degree_threshold": self.degree_threshold,
            "order_ok": self.order_ok,
            "degree_ok": self.degree_ok,
        }


def order_threshold(k: int, t: int) -> int:
    return (10 * t - 1) * (k - 1) + 12 * t + 13


def degree_threshold(k: int, t: int) -> int:
    return 3 * k * t - t + 1


def check_hypothesis(n: int | None, k: int, t: int, sigma_value=None) -> TheoremInstance:
    """Thresholds of the main degree-sum theorem and whether ``n`` and
    ``sigma_value`` meet them (``None`` leaves a flag undecided)."""
    if k < 1 or t < 1:
        raise ValueError("k and t must be at least 1")
    ot = order_threshold(k, t)
    dt = degree_threshold(k, t)
    return TheoremInstance(
        n,
        k,
        t,
        sigma_value,
        ot,
        dt,
        None if n is None else n >= ot,
        None if sigma_value is None else sigma_value >= dt,
    )


# (name, t, order bound as function of k, degree-sum bound as function of k)
PRIOR_THEOREMS = (
    ("theorem1", 1, lambda k: 4 * k, lambda k: 3 * k),
    ("theorem2", 2, lambda k: 4 * k, lambda k: 6 * k - 1),
    ("theorem3", 3, lambda k: 8 * k + 5, lambda k: 9 * k - 2),
    ("theorem4", 4, lambda k: 11 * k + 7, lambda k: 12 * k - 3),
)


def check_prior_theorems(g: Graph, k: int, budget: int | None = None) -> dict:
    """Run the packing search wherever a known sufficient condition applies.

    Returns ``{name: {...}}`` for the theorems whose hypotheses ``g``
    meets; the entry records the packing status, and a proven absence of
    ``k`` cycles raises :class:`SoundnessError`.
    """
    report = {}
    result = None
    for name, t, order_bound, sigma_bound in PRIOR_THEOREMS:
        if g.n < order_bound(k):
            continue
        stat = sigma(g, t)
        if stat.value < sigma_bound(k):
            continue
        if result is None:
            result = max_packing(g, k, budget)
            if result.status == EXHAUSTED:
                raise SoundnessError(f"{name} hypotheses hold but no {k}-packing exists", g)
        report[name] = {
            "t": t,
            "sigma": "infinity" if stat.is_infinite else stat.value,
            "sigma_bound": sigma_bound(k),
            "order_bound": order_bound(k),
            "status": result.status,
        }
    return report
