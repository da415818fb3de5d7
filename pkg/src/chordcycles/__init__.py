"""Chorded cycles in graphs: detection, decompositions, low-degree
independent sets, exact packings, and small-order verification sweeps."""

from .chordality import (
    CycleWithChords,
    chorded_cycle_from_two_paths,
    edge_bound_check,
    find_chorded_cycle,
    is_non_chorded,
    is_non_chorded_bruteforce,
)
from .decomposition import (
    block_cut,
    block_path_decompose,
    ear_decompose,
    ear_stem_certificate,
    stem_bound_check,
    triangle_free_check,
)
from .enumerate import enumerate_graphs, graph_classes
from .families import (
    conjecture_sweep,
    gen_g1,
    gen_g2,
    gen_sharpness_bipartite,
    max_low_degree_independent,
)
from .graph import Graph, degeneracy_ordering, parse_graph, serialize_graph, tripartition
from .low_degree import (
    nonchorded_independent_low_degree,
    tree_independent_low_degree,
    tree_low_degree_vertices,
)
from .packing import (
    check_hypothesis,
    check_prior_theorems,
    max_packing,
    minimal_packing,
    minimal_packing_properties,
    sigma,
    verify_packing,
)

__all__ = [
    "CycleWithChords",
    "Graph",
    "block_cut",
    "block_path_decompose",
    "check_hypothesis",
    "check_prior_theorems",
    "chorded_cycle_from_two_paths",
    "conjecture_sweep",
    "degeneracy_ordering",
    "ear_decompose",
    "ear_stem_certificate",
    "edge_bound_check",
    "enumerate_graphs",
    "find_chorded_cycle",
    "gen_g1",
    "gen_g2",
    "gen_sharpness_bipartite",
    "graph_classes",
    "is_non_chorded",
    "is_non_chorded_bruteforce",
    "max_low_degree_independent",
    "max_packing",
    "minimal_packing",
    "minimal_packing_properties",
    "nonchorded_independent_low_degree",
    "parse_graph",
    "serialize_graph",
    "sigma",
    "stem_bound_check",
    "tree_independent_low_degree",
    "tree_low_degree_vertices",
    "triangle_free_check",
    "tripartition",
    "verify_packing",
]

__version__ = "0.1.0"
