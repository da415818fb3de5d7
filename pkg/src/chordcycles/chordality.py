"""Chorded-cycle detection, witnesses, and the small constructive lemmas.

A cycle is *chorded* when some edge of the host graph joins two of its
non-consecutive vertices. Detection uses the observation that an edge
``uv`` is a chord of some cycle exactly when ``u`` and ``v`` are joined by
two internally disjoint paths avoiding ``uv``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import BudgetExceededError, ChordedInputError, PreconditionError, SoundnessError
from .flow import internally_disjoint_paths
from .graph import Graph, bits

ORACLE_MAX_N = 12


@dataclass(frozen=True)
class CycleWithChords:
    cycle: tuple[int, ...]
    chords: tuple[tuple[int, int], ...]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.cycle)

    @property
    def mask(self) -> int:
        out = 0
        for v in self.cycle:
            out |= 1 << v
        return out

    def __len__(self):
        return len(self.cycle)

    def to_json(self) -> dict:
        return {"cycle": list(self.cycle), "chords": [list(c) for c in self.chords]}

    @classmethod
    def from_json(cls, obj: dict) -> "CycleWithChords":
        return cls(tuple(obj["cycle"]), tuple(tuple(c) for c in obj["chords"]))


def canonical_cycle(cycle: Sequence[int]) -> tuple[int, ...]:
    """Rotate to start at the smallest vertex, heading to its smaller neighbor."""
    k = len(cycle)
    i = min(range(k), key=cycle.__getitem__)
    fwd = tuple(cycle[(i + j) % k] for j in range(k))
    back = tuple(cycle[(i - j) % k] for j in range(k))
    return min(fwd, back)


def cycle_chords(g: Graph, cycle: Sequence[int]) -> list[tuple[int, int]]:
    """Every host edge joining two non-consecutive vertices of ``cycle``."""
    k = len(cycle)
    pos = {v: i for i, v in enumerate(cycle)}
    out = []
    for i, u in enumerate(cycle):
        for w in g.adj[u]:
            j = pos.get(w)
            if j is None or j <= i:
                continue
            if j - i == 1 or (i == 0 and j == k - 1):
                continue
            out.append((u, w) if u < w else (w, u))
    return sorted(out)


def with_chords(g: Graph, cycle: Sequence[int]) -> CycleWithChords:
    cycle = canonical_cycle(cycle)
    return CycleWithChords(cycle, tuple(cycle_chords(g, cycle)))


def validate_cycle(g: Graph, c: CycleWithChords, require_chord: bool = True) -> None:
    """Raise :class:`SoundnessError` unless ``c`` is a genuine cycle of ``g``
    whose listed chords are exactly its host chords."""
    cyc = c.cycle
    k = len(cyc)
    if k < 3 or len(set(cyc)) != k:
        raise SoundnessError("cycle must have >= 3 distinct vertices", c)
    if any(not (0 <= v < g.n) for v in cyc):
        raise SoundnessError("cycle vertex out of range", c)
    for i in range(k):
        if not g.has_edge(cyc[i], cyc[(i + 1) % k]):
            raise SoundnessError(f"{cyc[i]}-{cyc[(i + 1) % k]} is not an edge", c)
    pos = {v: i for i, v in enumerate(cyc)}
    for u, v in c.chords:
        if u not in pos or v not in pos or not g.has_edge(u, v):
            raise SoundnessError(f"chord {u}-{v} is not an edge between cycle vertices", c)
        gap = abs(pos[u] - pos[v])
        if gap in (0, 1, k - 1):
            raise SoundnessError(f"chord {u}-{v} joins consecutive vertices", c)
    if sorted(tuple(sorted(ch)) for ch in c.chords) != cycle_chords(g, cyc):
        raise SoundnessError("chord list is incomplete", c)
    if require_chord and not c.chords:
        raise SoundnessError("cycle has no chord", c)


def is_valid_cycle(g: Graph, c: CycleWithChords, require_chord: bool = True) -> bool:
    try:
        validate_cycle(g, c, require_chord)
    except SoundnessError:
        return False
    return True


# -- detection ---------------------------------------------------------------


def chorded_cycle_on_edge(g: Graph, u: int, v: int) -> CycleWithChords | None:
    """A cycle having ``uv`` as a chord, if one exists."""
    if not g.has_edge(u, v) or g.degree(u) < 3 or g.degree(v) < 3:
        return None
    paths = internally_disjoint_paths(g.masks, u, v, 2)
    if len(paths) < 2:
        return None
    p, q = paths
    return with_chords(g, p + q[-2:0:-1])


def find_chorded_cycle(g: Graph) -> CycleWithChords | None:
    """First chorded cycle found, scanning candidate chords lexicographically."""
    masks = g.masks
    for u, v in g.edges:
        # a chord endpoint has two cycle edges plus the chord
        if masks[u].bit_count() < 3 or masks[v].bit_count() < 3:
            continue
        witness = chorded_cycle_on_edge(g, u, v)
        if witness is not None:
            return witness
    return None


def is_non_chorded(g: Graph) -> bool:
    return find_chorded_cycle(g) is None


def require_non_chorded(g: Graph, what: str = "graph") -> None:
    witness = find_chorded_cycle(g)
    if witness is not None:
        raise ChordedInputError(f"{what} contains a chorded cycle {list(witness.cycle)}", witness)


def is_non_chorded_bruteforce(g: Graph) -> bool:
    """Enumerate every cycle by DFS and look for a chord on each one."""
    n = g.n
    if n > ORACLE_MAX_N:
        raise BudgetExceededError(f"brute-force oracle is capped at n <= {ORACLE_MAX_N}")
    masks = g.masks
    for s in range(n):
        above = ~((1 << (s + 1)) - 1)
        path = [s]

        def dfs(v: int, on_path: int) -> bool:
            # returns True when a chorded cycle was found
            if len(path) >= 4 and (masks[v] >> s) & 1:
                k = len(path)
                for i, x in enumerate(path):
                    nbr = masks[x] & on_path
                    nbr &= ~(1 << path[i - 1]) & ~(1 << path[(i + 1) % k])
                    if nbr:
                        return True
            for w in bits(masks[v] & above & ~on_path):
                path.append(w)
                if dfs(w, on_path | (1 << w)):
                    return True
                path.pop()
            return False

        if dfs(s, 1 << s):
            return False
    return True


# -- chorded vertex sets -----------------------------------------------------


def induced_edge_count(masks: Sequence[int], mask: int) -> int:
    return sum((masks[v] & mask).bit_count() for v in bits(mask)) // 2


def minimal_chorded_sets(g: Graph, max_size: int | None = None) -> list[int]:
    """Inclusion-minimal vertex sets spanned by a chorded cycle.

    A set ``X`` is spanned by a chorded cycle exactly when the induced
    subgraph on ``X`` is Hamiltonian and has more than ``|X|`` edges (every
    induced edge off a Hamiltonian cycle is a chord of it). Sets are grown
    as simple paths anchored at their smallest vertex, layer by layer in
    size, and a path set containing an already-found smaller chorded set is
    not extended. Returned bitmasks are ordered by size, then by sorted
    vertex tuple.
    """
    n = g.n
    masks = g.masks
    if max_size is None:
        max_size = n
    found: list[int] = []
    by_vertex: list[list[int]] = [[] for _ in range(n)]
    layer = {1 << v: 1 << v for v in range(n)}
    size = 1
    while layer and size < max_size:
        size += 1
        nxt: dict[int, int] = {}
        for mask, ends in layer.items():
            s = (mask & -mask).bit_length() - 1
            above = ~((2 << s) - 1)
            for v in bits(ends):
                for w in bits(masks[v] & above & ~mask):
                    new = mask | (1 << w)
                    nxt[new] = nxt.get(new, 0) | (1 << w)
        new_found = []
        layer = {}
        for mask in sorted(nxt):
            # a smaller chorded set inside must contain the newest vertex,
            # but checking every vertex keeps this independent of path order
            if any(t & mask == t for v in bits(mask) for t in by_vertex[v]):
                continue
            ends = nxt[mask]
            s = (mask & -mask).bit_length() - 1
            if size >= 4 and ends & masks[s] and induced_edge_count(masks, mask) > size:
                new_found.append(mask)
            else:
                layer[mask] = ends
        for mask in new_found:
            found.append(mask)
            by_vertex[(mask & -mask).bit_length() - 1].append(mask)
    return sorted(found, key=lambda x: (x.bit_count(), tuple(bits(x))))


def spanning_chorded_cycle(g: Graph, mask: int) -> CycleWithChords | None:
    """Lexicographically least Hamiltonian cycle of the induced subgraph on
    ``mask``, provided it carries a chord."""
    size = mask.bit_count()
    if size < 4 or induced_edge_count(g.masks, mask) <= size:
        return None
    masks = g.masks
    s = (mask & -mask).bit_length() - 1
    path = [s]

    def extend(v: int, used: int) -> bool:
        if used == mask:
            return bool((masks[v] >> s) & 1)
        for w in bits(masks[v] & mask & ~used):
            path.append(w)
            if extend(w, used | (1 << w)):
                return True
            path.pop()
        return False

    if not extend(s, 1 << s):
        return None
    return with_chords(g, path)


# -- constructive lemmas -----------------------------------------------------


def _check_path(g: Graph, p: Sequence[int], name: str) -> None:
    if not p or len(set(p)) != len(p):
        raise PreconditionError(f"{name} must be a non-empty path with distinct vertices")
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            raise PreconditionError(f"{name}: {a}-{b} is not an edge")


def chorded_cycle_from_two_paths(
    g: Graph, p1: Sequence[int], p2: Sequence[int]
) -> CycleWithChords:
    """Chorded cycle inside the union of two paths joined by >= 5 edges.

    Requires vertex-disjoint paths with at least seven vertices in total.
    The returned cycle misses at least one vertex of the union; among all
    such cycles it spans the fewest vertices (ties broken by the sorted
    vertex tuple).
    """
    _check_path(g, p1, "p1")
    _check_path(g, p2, "p2")
    s1, s2 = set(p1), set(p2)
    if s1 & s2:
        raise PreconditionError("paths must be vertex-disjoint")
    if len(s1) + len(s2) < 7:
        raise PreconditionError("paths must have at least 7 vertices in total")
    cross = sum(1 for u in s1 for v in s2 if g.has_edge(u, v))
    if cross < 5:
        raise PreconditionError(f"need at least 5 edges between the paths, found {cross}")
    sub, labels = g.induced(s1 | s2)
    for mask in minimal_chorded_sets(sub, max_size=sub.n - 1):
        c = spanning_chorded_cycle(sub, mask)
        return with_chords(g, [labels[v] for v in c.cycle])
    raise SoundnessError(
        "no chorded cycle omitting a vertex of the two-path union", (list(p1), list(p2))
    )


WITHIN_BOUND = "within_bound"
EXCEEDS_BOUND = "exceeds_bound"


def edge_bound_check(g: Graph) -> str:
    """Compare ``m`` against ``2n - 4`` for a non-chorded graph of order >= 4.

    The triangle (``n = 3``, ``m = 3 > 2``) shows the bound is false below
    order four, so smaller inputs are rejected.
    """
    if g.n < 4:
        raise PreconditionError(
            "edge bound 2n-4 only holds for n >= 4 (the triangle has 3 > 2 edges)"
        )
    require_non_chorded(g)
    return WITHIN_BOUND if g.m <= 2 * g.n - 4 else EXCEEDS_BOUND


def cycles_vertex_disjoint(cycles: Iterable[CycleWithChords]) -> bool:
    seen = 0
    for c in cycles:
        if seen & c.mask:
            return False
        seen |= c.mask
    return True
