"""Exact discrete curvature on graphs.

Ollivier-Ricci, Lin-Lu-Yau and Steinerberger curvature, computed by closed
forms on trees and by optimal transport or linear algebra on any connected
graph, with each route usable as an oracle for the other.
"""

from .checks import (
    TheoremReport,
    comparison_check,
    degree_diameter_check,
    distance_identity_check,
    reverse_bonnet_myers_check,
)
from .curvature import (
    EdgeCurvature,
    NodeCurvature,
    edge_curvature,
    lly_limit_estimate,
    lly_tree_closed,
    orc_definitional,
    orc_tree_closed,
    steinerberger,
    steinerberger_solve,
    steinerberger_tree_closed,
)
from .errors import *  # noqa: F401,F403
from .generators import example_tree, random_connected_graph, random_tree
from .graph import (
    Graph,
    OrientedEdge,
    build_graph,
    degree,
    diameter,
    distance_matrix,
    geodesic,
    is_tree,
    parse_edge_list,
    read_edge_list,
    subtree_side,
    volume,
)
from .transport import (
    TransportResult,
    dirac,
    lazy_walk_measure,
    w1,
    w1_lp_oracle,
    w1_mincost_flow,
    w1_tree,
)

__version__ = "0.1.0"
