"""Blocks, ear decompositions and block-path decompositions.

Blocks follow the convention that a lone edge is never a biconnected
component: such edges are reported as bridges. Ear and block-path
decompositions are only produced for non-chorded inputs; chorded inputs
yield a chorded-cycle witness instead.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .chordality import CycleWithChords, find_chorded_cycle, require_non_chorded, with_chords
from .enumerate import is_biconnected_masks
from .errors import PreconditionError, SoundnessError
from .flow import disjoint_set_paths, internally_disjoint_paths
from .graph import Edge, Graph, bits


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# -- blocks ------------------------------------------------------------------


@dataclass(frozen=True)
class BlockCut:
    blocks: tuple[tuple[int, ...], ...]
    bridges: tuple[Edge, ...]
    articulation_points: tuple[int, ...]


def block_cut(g: Graph) -> BlockCut:
    """Blocks (>= 3 vertices), bridges and articulation points of ``g``.

    Iterative Hopcroft-Tarjan with an edge stack.
    """
    n = g.n
    adj = g.adj
    disc = [-1] * n
    low = [0] * n
    components: list[list[Edge]] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(adj[root]))]
        edge_stack: list[Edge] = []
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(adj[w])))
                    advanced = True
                    break
                if w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                comp = []
                while True:
                    e = edge_stack.pop()
                    comp.append(e)
                    if e == (parent, v):
                        break
                components.append(comp)
    blocks = []
    bridges = []
    membership = [0] * n
    for comp in components:
        verts = sorted({x for e in comp for x in e})
        for x in verts:
            membership[x] += 1
        if len(comp) == 1:
            bridges.append(_edge(*comp[0]))
        else:
            blocks.append(tuple(verts))
    blocks.sort()
    result = BlockCut(
        tuple(blocks),
        tuple(sorted(bridges)),
        tuple(v for v in range(n) if membership[v] >= 2),
    )
    _check_blocks_edge_disjoint(g, result)
    return result


def block_edges(g: Graph, block: Sequence[int]) -> set[Edge]:
    mask = 0
    for v in block:
        mask |= 1 << v
    return {(u, w) for u in block for w in bits(g.masks[u] & mask) if u < w}


def _check_blocks_edge_disjoint(g: Graph, bc: BlockCut) -> None:
    seen: set[Edge] = set()
    for block in bc.blocks:
        edges = block_edges(g, block)
        if edges & seen:
            raise SoundnessError("two blocks share an edge", (block, sorted(edges & seen)))
        seen |= edges
    if seen & set(bc.bridges) or len(seen) + len(bc.bridges) != g.m:
        raise SoundnessError("blocks and bridges do not partition the edges", bc)


# -- Propositions on non-chorded blocks --------------------------------------


def _require_block(b: Graph, min_order: int = 4) -> None:
    if b.n < min_order:
        raise PreconditionError(f"block must have at least {min_order} vertices")
    if not is_biconnected_masks(b.masks):
        raise PreconditionError("input is not biconnected")


def triangle_free_check(b: Graph) -> bool | tuple[int, int, int]:
    """``True`` for a triangle-free block, else a triangle ``(x, y, z)``.

    A triangle can only appear when the block is chorded; it is returned as
    evidence of that violated precondition.
    """
    _require_block(b)
    masks = b.masks
    for u, v in b.edges:
        common = masks[u] & masks[v] & ~((2 << v) - 1)
        if common:
            return (u, v, (common & -common).bit_length() - 1)
    return True


@dataclass(frozen=True)
class Ear:
    a: int
    interior: tuple[int, ...]
    b: int

    @property
    def path(self) -> tuple[int, ...]:
        return (self.a, *self.interior, self.b)

    def to_json(self) -> dict:
        return {"a": self.a, "interior": list(self.interior), "b": self.b}


@dataclass(frozen=True)
class EarDecomposition:
    base_cycle: tuple[int, ...]
    ears: tuple[Ear, ...]

    def to_json(self) -> dict:
        return {"base_cycle": list(self.base_cycle), "ears": [e.to_json() for e in self.ears]}


def _path_avoiding(masks: Sequence[int], s: int, t: int, blocked: int) -> list[int] | None:
    """BFS path from ``s`` to ``t``; ties go to the smaller vertex id."""
    parent = {s: None}
    queue = deque([s])
    while queue:
        v = queue.popleft()
        if v == t:
            path = []
            while v is not None:
                path.append(v)
                v = parent[v]
            return path[::-1]
        for w in bits(masks[v] & ~blocked):
            if w not in parent:
                parent[w] = v
                queue.append(w)
    return None


def cycle_through_edges(masks: Sequence[int], f: Edge, e: Edge) -> list[int]:
    """A cycle containing both edges of a biconnected graph, as a vertex list."""
    shared = set(f) & set(e)
    if shared:
        (x,) = shared
        y = f[0] if f[1] == x else f[1]
        z = e[0] if e[1] == x else e[1]
        path = _path_avoiding(masks, y, z, 1 << x)
        if path is None:
            raise SoundnessError("no cycle through two edges of a biconnected graph", (f, e))
        return [x] + path
    a, b = f
    paths = disjoint_set_paths(masks, [a, b], list(e), 2)
    if len(paths) < 2:
        raise SoundnessError("no cycle through two edges of a biconnected graph", (f, e))
    p, q = paths
    # p starts at a, q at b; both end in e, so joining them closes through e and f
    if p[0] != a:
        p, q = q, p
    return p + q[::-1]


def ear_decompose(b: Graph) -> EarDecomposition | CycleWithChords:
    """Greedy ear decomposition of a biconnected graph of order >= 4.

    Each step takes the lexicographically smallest edge ``f`` of the
    current subgraph and the smallest unused edge ``e``, finds a cycle
    through both and cuts out the stretch around ``e`` whose interior is
    new. A single-edge ear is a chord and is returned as a
    :class:`CycleWithChords`; so is any chorded cycle left once all edges
    are used, since only non-chorded blocks get a decomposition.
    """
    _require_block(b)
    masks = b.masks
    u, v = b.edges[0]
    (path,) = internally_disjoint_paths(masks, u, v, 1)
    base = path
    f_vertices = 0
    f_masks = [0] * b.n
    f_edges: set[Edge] = set()

    def add_path(p: Sequence[int], closed: bool = False) -> None:
        nonlocal f_vertices
        steps = list(zip(p, p[1:]))
        if closed:
            steps.append((p[-1], p[0]))
        for x, y in steps:
            f_edges.add(_edge(x, y))
            f_masks[x] |= 1 << y
            f_masks[y] |= 1 << x
        for x in p:
            f_vertices |= 1 << x

    add_path(base, closed=True)
    ears = []
    remaining = [e for e in b.edges if e not in f_edges]
    while remaining:
        e = remaining[0]
        f = min(f_edges)
        c, d = e
        if (f_vertices >> c) & 1 and (f_vertices >> d) & 1:
            # e would be a one-edge ear: a chord of a cycle inside F
            p, q = internally_disjoint_paths(f_masks, c, d, 2)
            return with_chords(b, p + q[-2:0:-1])
        cycle = cycle_through_edges(masks, f, e)
        k = len(cycle)
        i = next(i for i in range(k) if {cycle[i], cycle[(i + 1) % k]} == {c, d})
        # walk backwards from cycle[i] and forwards from cycle[i+1] to F
        back = [cycle[i]]
        j = i
        while not (f_vertices >> back[-1]) & 1:
            j = (j - 1) % k
            back.append(cycle[j])
        fwd = [cycle[(i + 1) % k]]
        j = (i + 1) % k
        while not (f_vertices >> fwd[-1]) & 1:
            j = (j + 1) % k
            fwd.append(cycle[j])
        ear_path = back[::-1] + fwd
        ears.append(Ear(ear_path[0], tuple(ear_path[1:-1]), ear_path[-1]))
        add_path(ear_path)
        remaining = [x for x in remaining if x not in f_edges]
    witness = find_chorded_cycle(b)
    if witness is not None:
        return witness
    result = EarDecomposition(tuple(base), tuple(ears))
    validate_ear_decomposition(b, result)
    return result


def validate_ear_decomposition(b: Graph, e: EarDecomposition) -> None:
    """Raise :class:`SoundnessError` unless ``e`` is an ear decomposition of ``b``."""
    base = e.base_cycle
    k = len(base)
    if k < 3 or len(set(base)) != k:
        raise SoundnessError("base cycle is not a simple cycle", e)
    used: set[Edge] = set()
    for i in range(k):
        x, y = base[i], base[(i + 1) % k]
        if not b.has_edge(x, y):
            raise SoundnessError(f"base cycle uses non-edge {x}-{y}", e)
        used.add(_edge(x, y))
    covered = set(base)
    for ear in e.ears:
        if ear.a == ear.b:
            raise SoundnessError("ear endpoints coincide", ear)
        if ear.a not in covered or ear.b not in covered:
            raise SoundnessError("ear endpoint outside the previous subgraph", ear)
        if covered & set(ear.interior) or len(set(ear.interior)) != len(ear.interior):
            raise SoundnessError("ear interior meets the previous subgraph", ear)
        if not ear.interior:
            raise SoundnessError("ear has a single edge", ear)
        p = ear.path
        for x, y in zip(p, p[1:]):
            edge = _edge(x, y)
            if not b.has_edge(x, y) or edge in used:
                raise SoundnessError(f"ear edge {x}-{y} missing or reused", ear)
            used.add(edge)
        covered.update(ear.interior)
    if used != set(b.edges):
        raise SoundnessError("decomposition does not cover every edge exactly once", e)


@dataclass(frozen=True)
class EarStemCertificate:
    per_ear_stem: tuple[int, ...]
    base_stems: tuple[int, int]


def ear_stem_certificate(b: Graph, e: EarDecomposition) -> EarStemCertificate:
    """A degree-2 interior vertex on every ear plus two degree-2 base vertices
    lying on no ear (smallest ids are chosen)."""
    try:
        validate_ear_decomposition(b, e)
    except SoundnessError as exc:
        raise PreconditionError(f"not an ear decomposition of the block: {exc}") from None
    deg = b.degrees()
    per_ear = []
    on_ears = set()
    for ear in e.ears:
        on_ears.update(ear.path)
        stems = [v for v in ear.interior if deg[v] == 2]
        if not stems:
            raise SoundnessError("ear without an interior stem", ear)
        per_ear.append(min(stems))
    base = sorted(v for v in e.base_cycle if v not in on_ears and deg[v] == 2)
    if len(base) < 2:
        raise SoundnessError("fewer than two stems on the base cycle off all ears", e)
    return EarStemCertificate(tuple(per_ear), (base[0], base[1]))


@dataclass(frozen=True)
class StemBound:
    stem_count: int
    bound: Fraction
    passed: bool


def stem_bound_check(b: Graph) -> StemBound:
    """Count degree-2 vertices of a non-chorded block against ``(n-2)/3 + 2``."""
    _require_block(b, min_order=3)
    require_non_chorded(b, "block")
    stems = sum(1 for d in b.degrees() if d == 2)
    bound = Fraction(b.n - 2, 3) + 2
    return StemBound(stems, bound, stems >= bound)


# -- block-path decomposition -------------------------------------------------


@dataclass(frozen=True)
class BlockPathDecomposition:
    """Blocks ``B_1..B_k`` in attachment order, ``connectors[i]`` joining the
    grown subgraph to ``blocks[i + 1]``, then pendant paths ending at leaves.

    Paths are vertex lists from ``a`` (already present) to ``b``; a
    single-vertex connector means the block shares ``a`` directly.
    """

    blocks: tuple[tuple[int, ...], ...]
    connectors: tuple[tuple[int, ...], ...]
    pendants: tuple[tuple[int, ...], ...]

    def to_json(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "connectors": [list(p) for p in self.connectors],
            "pendants": [list(p) for p in self.pendants],
        }


def _mask(vertices) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def block_path_decompose(h: Graph) -> BlockPathDecomposition | CycleWithChords:
    """Grow ``h`` block by block, then hang pendant paths off the result."""
    if not h.is_connected():
        raise PreconditionError("input must be connected")
    if h.m < h.n:
        raise PreconditionError("input is acyclic; use the tree routines")
    witness = find_chorded_cycle(h)
    if witness is not None:
        return witness
    bc = block_cut(h)
    masks = h.masks
    first, *remaining = bc.blocks
    blocks = [first]
    connectors = []
    f_mask = _mask(first)
    f_edges = block_edges(h, first)
    while remaining:
        touching = [blk for blk in remaining if f_mask & _mask(blk)]
        if touching:
            blk = touching[0]
            shared = f_mask & _mask(blk)
            if shared.bit_count() != 1:
                raise SoundnessError("unattached block meets the grown subgraph twice", blk)
            path = [shared.bit_length() - 1]
        else:
            target = 0
            for other in remaining:
                target |= _mask(other)
            path = _least_shortest_path(masks, f_mask, target)
            blk = next(x for x in remaining if (_mask(x) >> path[-1]) & 1)
        remaining.remove(blk)
        blocks.append(blk)
        connectors.append(tuple(path))
        f_edges |= {_edge(x, y) for x, y in zip(path, path[1:])}
        f_edges |= block_edges(h, blk)
        f_mask |= _mask(path) | _mask(blk)
    # every edge outside F_k lies in a tree hanging off F_k; orient toward it
    left = {e for e in h.edges if e not in f_edges}
    toward = {}
    queue = deque(bits(f_mask))
    seen = f_mask
    while queue:
        v = queue.popleft()
        for w in h.adj[v]:
            if not (seen >> w) & 1 and _edge(v, w) in left:
                seen |= 1 << w
                toward[w] = v
                queue.append(w)
    pendants = []
    for leaf in range(h.n):
        if h.degree(leaf) != 1 or (f_mask >> leaf) & 1:
            continue
        path = [leaf]
        while not (f_mask >> path[-1]) & 1:
            path.append(toward[path[-1]])
        f_mask |= _mask(path)
        pendants.append(tuple(reversed(path)))
    result = BlockPathDecomposition(tuple(blocks), tuple(connectors), tuple(pendants))
    validate_block_path(h, result)
    return result


def _least_shortest_path(masks: Sequence[int], start_mask: int, target_mask: int) -> list[int]:
    """Lexicographically least among shortest paths from ``start_mask`` to
    ``target_mask``, listed from the start side."""
    n = len(masks)
    dist = [-1] * n
    queue = deque()
    for t in bits(target_mask):
        dist[t] = 0
        queue.append(t)
    while queue:
        v = queue.popleft()
        for w in bits(masks[v]):
            if dist[w] == -1:
                dist[w] = dist[v] + 1
                queue.append(w)
    starts = [v for v in bits(start_mask) if dist[v] >= 0]
    best = min(dist[v] for v in starts)
    path = [min(v for v in starts if dist[v] == best)]
    while dist[path[-1]] > 0:
        v = path[-1]
        path.append(min(w for w in bits(masks[v]) if dist[w] == dist[v] - 1))
    return path


def validate_block_path(h: Graph, d: BlockPathDecomposition) -> None:
    """Check the edge partition and the attachment rules of every step."""
    used: set[Edge] = set()
    if not d.blocks:
        raise SoundnessError("no blocks", d)
    f_mask = _mask(d.blocks[0])
    used |= block_edges(h, d.blocks[0])
    for path, blk in zip(d.connectors, d.blocks[1:]):
        a, b = path[0], path[-1]
        if not (f_mask >> a) & 1 or b not in blk:
            raise SoundnessError("connector endpoints misplaced", path)
        if _mask(path) & f_mask != 1 << a or _mask(path) & _mask(blk) != 1 << b:
            raise SoundnessError("connector meets the grown subgraph or block twice", path)
        overlap = f_mask & _mask(blk)
        if overlap != (1 << a if a == b else 0):
            raise SoundnessError("block overlaps the grown subgraph illegally", blk)
        for x, y in zip(path, path[1:]):
            e = _edge(x, y)
            if not h.has_edge(x, y) or e in used:
                raise SoundnessError(f"connector edge {x}-{y} missing or reused", path)
            used.add(e)
        edges = block_edges(h, blk)
        if edges & used:
            raise SoundnessError("block edge reused", blk)
        used |= edges
        f_mask |= _mask(path) | _mask(blk)
    for path in d.pendants:
        a, b = path[0], path[-1]
        if len(path) < 2 or _mask(path) & f_mask != 1 << a or h.degree(b) != 1:
            raise SoundnessError("pendant path misplaced", path)
        for x, y in zip(path, path[1:]):
            e = _edge(x, y)
            if not h.has_edge(x, y) or e in used:
                raise SoundnessError(f"pendant edge {x}-{y} missing or reused", path)
            used.add(e)
        f_mask |= _mask(path)
    if used != set(h.edges):
        raise SoundnessError("decomposition does not cover every edge exactly once", d)


def grown_subgraph_stems(h: Graph, d: BlockPathDecomposition) -> list[tuple[int, int]]:
    """``(|S_i|, |F_i|)`` along the block-growing sequence ``F_1..F_k``, where
    ``S_i`` counts vertices of degree at most 2 inside ``F_i``."""
    out = []
    f_masks = [0] * h.n
    f_vertices = 0
    steps = [((), d.blocks[0])] + list(zip(d.connectors, d.blocks[1:]))
    for path, blk in steps:
        bm = _mask(blk)
        for v in blk:
            f_masks[v] |= h.masks[v] & bm
        for x, y in zip(path, path[1:]):
            f_masks[x] |= 1 << y
            f_masks[y] |= 1 << x
        f_vertices |= bm | _mask(path)
        size = f_vertices.bit_count()
        stems = sum(1 for v in bits(f_vertices) if f_masks[v].bit_count() <= 2)
        out.append((stems, size))
    return out


def check_grown_subgraph_bound(h: Graph, d: BlockPathDecomposition) -> list[tuple[int, int]]:
    """Deep check: ``|S_i| >= |F_i|/5 + 2`` at every block step."""
    sizes = grown_subgraph_stems(h, d)
    for i, (stems, size) in enumerate(sizes, 1):
        if stems < Fraction(size, 5) + 2:
            raise SoundnessError(f"step {i}: {stems} stems < {size}/5 + 2", d)
    return sizes

