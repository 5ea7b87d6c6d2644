"""Steiner k-eccentricity on trees, block graphs and general graphs."""

from .errors import (
    CyclomaticCapExceeded,
    DisconnectedError,
    InvalidK,
    NotATreeError,
    NotBlockGraphError,
    ParseError,
    PreconditionError,
    SteinerEccError,
    TooLargeError,
    TooSmallError,
    WeightedUnsupportedError,
)
from .graph import (
    BlockDecomposition,
    Graph,
    biconnected_components,
    bfs_distances,
    classify,
    find_cycle,
    parse_graph,
    read_graph,
    serialize_graph,
)
from .report import EccReport
from .oracle import SteinerResult, ecc_k_all_spanning_trees, ecc_k_oracle, steiner_tree_exact
from .tree import ecc_k_tree
from .block import build_tvg, ecc_k_block, near_vertices
from .general import RecursionState, ecc_k_general, recursion_trace
from .all3 import TopThreeState, all_ecc3

__version__ = "0.1.0"
