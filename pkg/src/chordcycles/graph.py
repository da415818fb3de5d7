"""Immutable simple undirected graphs on vertices ``0..n-1``.

Adjacency is kept twice: as sorted neighbor tuples (for readable
iteration) and as integer bitmasks (for the hot loops of the exhaustive
searches). Both views are built once and never mutated.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import (
    DuplicateEdgeError,
    EdgeCountMismatchError,
    MalformedEdgeError,
    MalformedHeaderError,
    PreconditionError,
    SelfLoopError,
    VertexRangeError,
)

Edge = tuple[int, int]


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    __slots__ = ("n", "masks", "_adj", "_edges")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        masks = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            if (masks[u] >> v) & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        self.n = n
        self.masks = tuple(masks)
        self._adj = None
        self._edges = None

    @classmethod
    def from_masks(cls, masks: Sequence[int]) -> "Graph":
        """Build from adjacency bitmasks; the caller guarantees symmetry."""
        g = cls.__new__(cls)
        g.n = len(masks)
        g.masks = tuple(masks)
        g._adj = None
        g._edges = None
        return g

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        if self._adj is None:
            self._adj = tuple(tuple(bits(m)) for m in self.masks)
        return self._adj

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges ``(u, v)`` with ``u < v``, sorted lexicographically."""
        if self._edges is None:
            self._edges = tuple(
                (u, v) for u, m in enumerate(self.masks) for v in bits(m >> (u + 1) << (u + 1))
            )
        return self._edges

    @property
    def m(self) -> int:
        return sum(m.bit_count() for m in self.masks) // 2

    def degree(self, v: int) -> int:
        return self.masks[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.masks]

    def min_degree(self) -> int:
        return min(self.degrees()) if self.n else 0

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.masks[u] >> v) & 1)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def induced(self, vertices: Iterable[int]) -> tuple["Graph", tuple[int, ...]]:
        """Induced subgraph relabeled to ``0..k-1``.

        Returns the subgraph and ``labels`` where ``labels[i]`` is the
        original id of new vertex ``i`` (labels are sorted).
        """
        labels = tuple(sorted(set(vertices)))
        index = {v: i for i, v in enumerate(labels)}
        masks = []
        for v in labels:
            mask = 0
            for w in bits(self.masks[v]):
                j = index.get(w)
                if j is not None:
                    mask |= 1 << j
            masks.append(mask)
        return Graph.from_masks(masks), labels

    def components(self) -> list[tuple[int, ...]]:
        """Vertex sets of connected components, ordered by smallest vertex."""
        seen = 0
        out = []
        for s in range(self.n):
            if (seen >> s) & 1:
                continue
            comp = reach(self.masks, s)
            seen |= comp
            out.append(tuple(bits(comp)))
        return out

    def is_connected(self) -> bool:
        return self.n <= 1 or reach(self.masks, 0) == (1 << self.n) - 1

    def is_forest(self) -> bool:
        return self.m == self.n - len(self.components())

    def is_tree(self) -> bool:
        return self.n >= 1 and self.is_connected() and self.m == self.n - 1

    def edge_bitstring(self) -> int:
        """Upper-triangular adjacency bits, pair (0,1) most significant."""
        code = 0
        n = self.n
        for u in range(n):
            row = self.masks[u]
            for v in range(u + 1, n):
                code = (code << 1) | ((row >> v) & 1)
        return code

    def __eq__(self, other):
        return isinstance(other, Graph) and self.masks == other.masks

    def __hash__(self):
        return hash(self.masks)

    def __repr__(self):
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def reach(masks: Sequence[int], start: int, blocked: int = 0) -> int:
    """Bitmask of vertices reachable from ``start`` avoiding ``blocked``."""
    seen = frontier = 1 << start
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= masks[v]
        frontier = nxt & ~seen & ~blocked
        seen |= frontier
    return seen


# -- edge-list format --------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the ``"n m"`` header plus ``m`` lines of ``"u v"`` edge format.

    Blank lines and lines starting with ``#`` are ignored.
    """
    lines = [
        (no, line.split())
        for no, line in enumerate(text.splitlines(), 1)
        if line.strip() and not line.lstrip().startswith("#")
    ]
    if not lines:
        raise MalformedHeaderError("missing 'n m' header")
    no, header = lines[0]
    if len(header) != 2:
        raise MalformedHeaderError("header must be 'n m'", no)
    try:
        n, m = (int(x) for x in header)
    except ValueError:
        raise MalformedHeaderError("header values must be integers", no) from None
    if n < 0 or m < 0:
        raise MalformedHeaderError("header values must be non-negative", no)
    body = lines[1:]
    if len(body) != m:
        raise EdgeCountMismatchError(f"header declares {m} edges, found {len(body)}")
    masks = [0] * n
    for no, fields in body:
        if len(fields) != 2:
            raise MalformedEdgeError("edge line must be 'u v'", no)
        try:
            u, v = (int(x) for x in fields)
        except ValueError:
            raise MalformedEdgeError("edge endpoints must be integers", no) from None
        if not (0 <= u < n and 0 <= v < n):
            raise VertexRangeError(f"vertex id out of range 0..{n - 1}", no)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", no)
        if (masks[u] >> v) & 1:
            raise DuplicateEdgeError(f"duplicate edge {u} {v}", no)
        masks[u] |= 1 << v
        masks[v] |= 1 << u
    return Graph.from_masks(masks)


def serialize_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# -- small named graphs ------------------------------------------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def complete_graph(n: int) -> Graph:
    return Graph(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def complete_bipartite(a: int, b: int) -> Graph:
    """``K_{a,b}`` with parts ``0..a-1`` and ``a..a+b-1``."""
    return Graph(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, edges)


# -- degeneracy ordering and tripartition ----------------------------------


@dataclass(frozen=True)
class VertexOrdering:
    order: tuple[int, ...]
    max_back_degree: int


@dataclass(frozen=True)
class DenseCoreWitness:
    """Vertex set of a subgraph whose minimum degree is at least 3."""

    vertices: tuple[int, ...]


@dataclass(frozen=True)
class Tripartition:
    color: tuple[int, ...]

    def classes(self) -> list[tuple[int, ...]]:
        return [tuple(v for v, c in enumerate(self.color) if c == k) for k in range(3)]


def back_degrees(g: Graph, order: Sequence[int]) -> list[int]:
    """Number of earlier neighbors for each position of ``order``."""
    earlier = 0
    out = []
    for v in order:
        out.append((g.masks[v] & earlier).bit_count())
        earlier |= 1 << v
    return out


def degeneracy_ordering(g: Graph) -> VertexOrdering | DenseCoreWitness:
    """Peel minimum-degree vertices (lowest id first) and reverse.

    If the remaining graph ever has minimum degree 3 or more, its vertex
    set is returned as a :class:`DenseCoreWitness` instead.
    """
    alive = (1 << g.n) - 1
    peeled = []
    while alive:
        best = None
        best_deg = None
        for v in bits(alive):
            d = (g.masks[v] & alive).bit_count()
            if best_deg is None or d < best_deg:
                best, best_deg = v, d
        if best_deg >= 3:
            return DenseCoreWitness(tuple(bits(alive)))
        peeled.append(best)
        alive &= ~(1 << best)
    order = tuple(reversed(peeled))
    return VertexOrdering(order, max(back_degrees(g, order), default=0))


def tripartition(g: Graph) -> Tripartition:
    """Greedy proper 3-coloring along the degeneracy ordering."""
    ordering = degeneracy_ordering(g)
    if isinstance(ordering, DenseCoreWitness):
        raise PreconditionError(
            f"graph has a subgraph of minimum degree >= 3 on {list(ordering.vertices)}"
        )
    color = [-1] * g.n
    for v in ordering.order:
        used = {color[w] for w in g.adj[v] if color[w] >= 0}
        color[v] = min(c for c in range(3) if c not in used)
    return Tripartition(tuple(color))


def is_proper_coloring(g: Graph, color: Sequence[int]) -> bool:
    return all(color[u] != color[v] for u, v in g.edges)
