"""Exhaustive structural sweeps over non-chorded graphs of small order.

Each sweep walks one representative per isomorphism class and raises
:class:`SoundnessError` on the first counterexample; the returned report
only carries counts and extremal examples.
"""

from __future__ import annotations

from .chordality import EXCEEDS_BOUND, edge_bound_check, find_chorded_cycle
from .decomposition import (
    EarDecomposition,
    ear_decompose,
    ear_stem_certificate,
    stem_bound_check,
    triangle_free_check,
)
from .enumerate import MAX_ENUMERATION_N, graph_classes
from .errors import BudgetExceededError, SoundnessError
from .graph import DenseCoreWitness, degeneracy_ordering, is_proper_coloring, serialize_graph, tripartition


def _cap(max_n: int) -> None:
    if max_n > MAX_ENUMERATION_N:
        raise BudgetExceededError(f"sweeps are capped at n <= {MAX_ENUMERATION_N}")


def fact1_sweep(max_n: int) -> dict:
    """Non-chorded graphs are 2-degenerate and greedily 3-colorable."""
    _cap(max_n)
    counts = {}
    for n in range(1, max_n + 1):
        graphs = graph_classes(n, "non_chorded")
        for g in graphs:
            ordering = degeneracy_ordering(g)
            if isinstance(ordering, DenseCoreWitness) or ordering.max_back_degree > 2:
                raise SoundnessError("non-chorded graph is not 2-degenerate", g)
            if not is_proper_coloring(g, tripartition(g).color):
                raise SoundnessError("greedy tripartition is not proper", g)
        counts[str(n)] = len(graphs)
    return {"sweep": "fact1", "max_n": max_n, "graphs_by_n": counts}


def fact2_sweep(max_n: int) -> dict:
    """``m <= 2n - 4`` for non-chorded graphs from order 4; reports how many
    classes meet it with equality."""
    _cap(max_n)
    counts, tight = {}, {}
    for n in range(4, max_n + 1):
        graphs = graph_classes(n, "non_chorded")
        for g in graphs:
            if edge_bound_check(g) == EXCEEDS_BOUND:
                raise SoundnessError(f"{g.m} edges exceed 2n-4 = {2 * n - 4}", g)
        counts[str(n)] = len(graphs)
        tight[str(n)] = sum(1 for g in graphs if g.m == 2 * n - 4)
    return {
        "sweep": "fact2",
        "max_n": max_n,
        "graphs_by_n": counts,
        "tight_by_n": tight,
        "n3_exception": {"n": 3, "m": 3, "bound": 2},
    }


def prop4_sweep(max_n: int) -> dict:
    """Triangle-freeness, ear decomposition with stems, and the stem bound
    for every non-chorded biconnected graph of order >= 4."""
    _cap(max_n)
    counts = {}
    slack = None
    tight = []
    for n in range(4, max_n + 1):
        graphs = graph_classes(n, "non_chorded_biconnected")
        for g in graphs:
            if triangle_free_check(g) is not True:
                raise SoundnessError("non-chorded block contains a triangle", g)
            dec = ear_decompose(g)
            if not isinstance(dec, EarDecomposition):
                raise SoundnessError("ear construction produced a chord", g)
            ear_stem_certificate(g, dec)
            branch = sum(1 for d in g.degrees() if d >= 3)
            if branch > 2 * len(dec.ears):
                raise SoundnessError(f"{branch} branch vertices with {len(dec.ears)} ears", g)
            sb = stem_bound_check(g)
            if not sb.passed:
                raise SoundnessError(f"{sb.stem_count} stems < {sb.bound}", g)
            gap = sb.stem_count - sb.bound
            if slack is None or gap < slack:
                slack, tight = gap, [g]
            elif gap == slack:
                tight.append(g)
        counts[str(n)] = len(graphs)
    return {
        "sweep": "prop4",
        "max_n": max_n,
        "graphs_by_n": counts,
        "min_slack": None if slack is None else {"num": slack.numerator, "den": slack.denominator},
        "min_slack_witnesses": [serialize_graph(g) for g in tight],
    }


def dense_core_consistency(max_n: int) -> int:
    """Every dense core found by peeling contains a chorded cycle."""
    _cap(max_n)
    checked = 0
    for n in range(4, max_n + 1):
        for g in graph_classes(n, "all"):
            ordering = degeneracy_ordering(g)
            if isinstance(ordering, DenseCoreWitness):
                core, _ = g.induced(ordering.vertices)
                if find_chorded_cycle(core) is None:
                    raise SoundnessError("dense core without a chorded cycle", g)
                checked += 1
    return checked

