"""Vertex-disjoint path search by augmenting paths on a vertex-split network.

Each vertex ``v`` becomes an arc ``v_in -> v_out`` of capacity one, so a
flow of value ``k`` decomposes into ``k`` pairwise vertex-disjoint paths.
"""

from __future__ import annotations

from collections import deque
from typing import Sequence

from .graph import bits

Path = list[int]


def disjoint_set_paths(
    masks: Sequence[int],
    sources: Sequence[int],
    targets: Sequence[int],
    limit: int,
    blocked: int = 0,
) -> list[Path]:
    """Up to ``limit`` pairwise vertex-disjoint paths from ``sources`` to ``targets``.

    Paths never visit a vertex in the ``blocked`` bitmask. A vertex that is
    both a source and a target yields a single-vertex path. The result is
    maximum when fewer than ``limit`` paths are returned.
    """
    n = len(masks)
    allowed = ~blocked
    src = [s for s in sorted(set(sources)) if (allowed >> s) & 1]
    tgt = 0
    for t in targets:
        tgt |= 1 << t
    tgt &= allowed
    # nodes: v_in = 2v, v_out = 2v + 1, super source S = 2n, super sink T = 2n + 1
    S, T = 2 * n, 2 * n + 1
    flow: set[tuple[int, int]] = set()
    into: dict[int, int] = {}  # node -> the node sending it flow (capacity one everywhere)
    found = 0
    while found < limit:
        parent: dict[int, tuple[int, bool]] = {S: (-1, True)}
        queue = deque([S])
        reached = False
        while queue and not reached:
            x = queue.popleft()
            # forward residual arcs
            if x == S:
                succ = [2 * s for s in src]
            elif x & 1 == 0:
                succ = [x + 1]
            else:
                v = x >> 1
                succ = [2 * w for w in bits(masks[v] & allowed)]
                if (tgt >> v) & 1:
                    succ.append(T)
            for y in succ:
                if y not in parent and (x, y) not in flow:
                    parent[y] = (x, True)
                    if y == T:
                        reached = True
                        break
                    queue.append(y)
            if reached:
                break
            # reverse residual arc: undo the flow entering x
            y = into.get(x)
            if y is not None and y not in parent:
                parent[y] = (x, False)
                queue.append(y)
        if not reached:
            break
        y = T
        while y != S:
            x, forward = parent[y]
            if forward:
                flow.add((x, y))
                into[y] = x
            else:
                flow.discard((y, x))
                if into.get(x) == y:
                    del into[x]
            y = x
        found += 1
    out_of = {x: y for x, y in flow}
    paths = []
    for s in src:
        if (S, 2 * s) not in flow:
            continue
        path = [s]
        node = out_of[2 * s + 1]
        while node != T:
            path.append(node >> 1)
            node = out_of[node + 1]
        paths.append(path)
    return paths


def internally_disjoint_paths(
    masks: Sequence[int], s: int, t: int, limit: int, skip_edge: bool = True
) -> list[Path]:
    """Up to ``limit`` internally vertex-disjoint ``s``-``t`` paths.

    With ``skip_edge`` the direct edge ``st`` is not used, so every path has
    at least one interior vertex.
    """
    ns = [w for w in bits(masks[s]) if w != t]
    nt = [w for w in bits(masks[t]) if w != s]
    paths = disjoint_set_paths(masks, ns, nt, limit, blocked=(1 << s) | (1 << t))
    out = [[s] + p + [t] for p in paths]
    if not skip_edge and (masks[s] >> t) & 1 and len(out) < limit:
        out.append([s, t])
    return out
