"""Strong vertex and edge span of trees."""

from .generators import enumerate_trees, perfect_binary_tree, path_tree, prufer_decode, random_tree, spider_tree, star_tree
from .graph_core import (
    INFINITY,
    CenterInfo,
    ComponentSet,
    Graph,
    GraphError,
    NotATreeError,
    Tree,
    bfs_distances,
    center_and_radius,
    components_minus_vertex,
    is_path,
    parse_edge_list,
    validate_tree,
)
from .oracle import all_pairs_distances, feasible_at, product_span_oracle
from .tree_span import (
    InvariantViolation,
    ReachTable,
    SpanResult,
    brute_triod_size,
    eta,
    height_scan,
    max_eta_vertices,
    strong_edge_span,
    strong_vertex_span,
    tree_triod_size,
)
from .witness import SwitchCertificate, VerifyReport, WalkPair, build_witness, detect_switch, edge_coverage, verify_walk_pair

__version__ = "0.1.0"
