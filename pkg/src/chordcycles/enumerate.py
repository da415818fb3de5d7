"""Exhaustive small-graph enumeration.

Two flavours are provided:

* :func:`enumerate_graphs` yields every *labeled* graph on ``n`` vertices
  passing a filter, in lexicographic order of the upper-triangular
  adjacency bitstring. Non-chorded filters prune by edge-addition
  backtracking (adding edges never removes a chorded cycle).
* :func:`graph_classes` yields one canonically labeled representative per
  isomorphism class, grown one vertex at a time and deduplicated by nauty
  certificates. Universally quantified properties that do not depend on
  vertex names can be checked over classes at orders where labeled
  enumeration is out of reach.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

from .errors import BudgetExceededError
from .graph import Graph, bits, reach

MAX_ENUMERATION_N = 9
FILTERS = ("all", "connected", "non_chorded", "non_chorded_connected", "non_chorded_biconnected")


def _two_paths(masks: Sequence[int], u: int, v: int, full: int) -> bool:
    """Whether ``u`` and ``v`` are joined by two internally disjoint paths
    avoiding the edge ``uv`` (no single vertex separates them)."""
    mu = masks[u] & ~(1 << v)
    mv = masks[v] & ~(1 << u)
    if mu.bit_count() < 2 or mv.bit_count() < 2:
        return False
    tmp = list(masks)
    tmp[u] = mu
    tmp[v] = mv
    comp = reach(tmp, u)
    if not (comp >> v) & 1:
        return False
    for w in bits(comp & ~(1 << u) & ~(1 << v)):
        if not (reach(tmp, u, 1 << w) >> v) & 1:
            return False
    return True


def has_chorded_cycle(masks: Sequence[int]) -> bool:
    """Bitmask chordality test used for enumeration pruning."""
    full = (1 << len(masks)) - 1
    for u, mu in enumerate(masks):
        if mu.bit_count() < 3:
            continue
        for v in bits(mu >> (u + 1) << (u + 1)):
            if masks[v].bit_count() >= 3 and _two_paths(masks, u, v, full):
                return True
    return False


def is_connected_masks(masks: Sequence[int]) -> bool:
    n = len(masks)
    return n <= 1 or reach(masks, 0) == (1 << n) - 1


def is_biconnected_masks(masks: Sequence[int]) -> bool:
    """At least three vertices, connected, and no cut vertex."""
    n = len(masks)
    if n < 3 or not is_connected_masks(masks):
        return False
    full = (1 << n) - 1
    for v in range(n):
        rest = full & ~(1 << v)
        start = (rest & -rest).bit_length() - 1
        if reach(masks, start, 1 << v) != rest:
            return False
    return True


def is_biconnected(g: Graph) -> bool:
    return is_biconnected_masks(g.masks)


def _check_cap(n: int) -> None:
    if n > MAX_ENUMERATION_N:
        raise BudgetExceededError(f"enumeration is capped at n <= {MAX_ENUMERATION_N}")
    if n < 0:
        raise ValueError("n must be non-negative")


def enumerate_graphs(n: int, filter: str = "all") -> Iterator[Graph]:
    """Every labeled graph on ``n`` vertices passing ``filter``, each once.

    Order is lexicographic in the upper-triangular adjacency bitstring with
    the pair ``(0, 1)`` first.
    """
    _check_cap(n)
    if filter not in FILTERS:
        raise ValueError(f"unknown filter {filter!r}; expected one of {FILTERS}")
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if filter in ("all", "connected"):
        total = len(pairs)
        want_connected = filter == "connected"
        for code in range(1 << total):
            masks = [0] * n
            for i, (u, v) in enumerate(pairs):
                if (code >> (total - 1 - i)) & 1:
                    masks[u] |= 1 << v
                    masks[v] |= 1 << u
            if want_connected and not is_connected_masks(masks):
                continue
            yield Graph.from_masks(masks)
        return
    keep = {
        "non_chorded": None,
        "non_chorded_connected": is_connected_masks,
        "non_chorded_biconnected": is_biconnected_masks,
    }[filter]
    yield from _non_chorded_backtrack(n, pairs, keep)


def _non_chorded_backtrack(n, pairs, keep) -> Iterator[Graph]:
    masks = [0] * n
    total = len(pairs)
    full = (1 << n) - 1

    def rec(i):
        if i == total:
            if keep is None or keep(masks):
                yield Graph.from_masks(masks)
            return
        yield from rec(i + 1)
        u, v = pairs[i]
        masks[u] |= 1 << v
        masks[v] |= 1 << u
        if not _edge_closes_chord(masks, u, v, full):
            yield from rec(i + 1)
        masks[u] ^= 1 << v
        masks[v] ^= 1 << u

    yield from rec(0)


def _edge_closes_chord(masks, u, v, full) -> bool:
    # The graph without uv is non-chorded, so any chorded cycle uses u and v.
    if masks[u].bit_count() < 2 or masks[v].bit_count() < 2:
        return False
    return has_chorded_cycle(masks)


def labeled_trees(n: int) -> Iterator[Graph]:
    """All ``n**(n-2)`` labeled trees on ``n >= 2`` vertices via Prüfer codes."""
    if n < 2:
        raise ValueError("trees here have at least 2 vertices")
    if n == 2:
        yield Graph(2, [(0, 1)])
        return
    from itertools import product

    for code in product(range(n), repeat=n - 2):
        yield _prufer_decode(code, n)


def _prufer_decode(code: Sequence[int], n: int) -> Graph:
    degree = [1] * n
    for x in code:
        degree[x] += 1
    masks = [0] * n
    leaves = [v for v in range(n) if degree[v] == 1]
    import heapq

    heapq.heapify(leaves)
    for x in code:
        leaf = heapq.heappop(leaves)
        masks[leaf] |= 1 << x
        masks[x] |= 1 << leaf
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u = heapq.heappop(leaves)
    v = heapq.heappop(leaves)
    masks[u] |= 1 << v
    masks[v] |= 1 << u
    return Graph.from_masks(masks)


# -- isomorphism classes -----------------------------------------------------


def _canonical(masks: Sequence[int]) -> tuple[bytes, tuple[int, ...]]:
    import pynauty

    n = len(masks)
    pg = pynauty.Graph(n, adjacency_dict={v: list(bits(masks[v])) for v in range(n)})
    lab = pynauty.canon_label(pg)
    inv = [0] * n
    for i, v in enumerate(lab):
        inv[v] = i
    canon = [0] * n
    for v in range(n):
        row = 0
        for w in bits(masks[v]):
            row |= 1 << inv[w]
        canon[inv[v]] = row
    return pynauty.certificate(pg), tuple(canon)


CLASS_FILTERS = ("all", "connected", "non_chorded", "non_chorded_connected")


@lru_cache(maxsize=None)
def _classes(n: int, family: str) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    if n == 1:
        return (Graph(1),)
    connected = family in ("connected", "non_chorded_connected")
    non_chorded = family.startswith("non_chorded")
    seen: dict[bytes, tuple[int, ...]] = {}
    for base in _classes(n - 1, family):
        old = base.masks
        new_v = n - 1
        for size in range(1 if connected else 0, n):
            for nbrs in combinations(range(n - 1), size):
                masks = list(old) + [0]
                for w in nbrs:
                    masks[w] |= 1 << new_v
                    masks[new_v] |= 1 << w
                if non_chorded and size >= 2 and has_chorded_cycle(masks):
                    continue
                cert, canon = _canonical(masks)
                if cert not in seen:
                    seen[cert] = canon
    graphs = [Graph.from_masks(m) for m in seen.values()]
    graphs.sort(key=lambda g: g.edge_bitstring())
    return tuple(graphs)


def graph_classes(n: int, filter: str = "all") -> tuple[Graph, ...]:
    """One representative per isomorphism class of ``n``-vertex graphs.

    ``filter`` is one of :data:`FILTERS`. Representatives are canonically
    labeled and sorted by adjacency bitstring, so the output is stable.
    """
    _check_cap(n)
    if filter == "non_chorded_biconnected":
        return tuple(g for g in _classes(n, "non_chorded_connected") if is_biconnected_masks(g.masks))
    if filter not in CLASS_FILTERS:
        raise ValueError(f"unknown filter {filter!r}; expected one of {FILTERS}")
    return _classes(n, filter)
