"""Exact resistance distances and Kirchhoff indices, with a fast path for cacti."""

from .canon import canonical_certificate, is_isomorphic
from .closed_forms import CactusClassSpec
from .constructions import (
    RootedGraph,
    build_extremal_chain,
    build_minimal_star,
    build_triangle_chain,
    compose_kf,
)
from .enumeration import enumerate_cacti, extremal_scan, random_cactus
from .graph import Graph, block_cut_tree, coalesce, is_cactus, shortest_path_distance
from .resistance import (
    effective_resistance_cactus,
    effective_resistance_laplacian,
    kirchhoff_index,
    resistance_matrix,
    vertex_transmission,
)
from .transformations import canonicalize_to_extremal, longest_path_endpoints

__version__ = "0.1.0"
