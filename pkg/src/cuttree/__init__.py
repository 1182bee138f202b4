"""Cut trees of undirected weighted graphs.

Two construction families over one warm-startable min-cut engine: the
classical contraction algorithm (with two source/sink heuristics and the
uncontracted baseline) and the generalized laminar-family algorithm driven
by a divide-and-conquer ordered-cuts procedure.  Instance generators, a
brute-force verification oracle, and a benchmarking CLI round out the
package.
"""

from .graph import Cut, Graph, InvalidCutError, bfs_reorder, contract_set, cut_cost
from .gh import gomory_hu, gusfield, pick_pair_heaviest
from .maxflow import (
    FlowState,
    MinCutResult,
    extract_min_cut_sides,
    min_cut,
    multi_sink_min_cut,
)
from .metrics import RunMetrics, SizePair
from .ocdriver import oc_gomory_hu
from .octree import OcTree, extract_valid_cuts
from .ordered_cuts import choose_k, ordered_cuts, update_kbar
from .oracle import all_pairs_min_cut, check_cut_tree, check_oc_tree
from .partition import CutTree, PartitionTree, auxiliary_graph

__all__ = [
    "Cut",
    "Graph",
    "InvalidCutError",
    "bfs_reorder",
    "contract_set",
    "cut_cost",
    "gomory_hu",
    "gusfield",
    "pick_pair_heaviest",
    "FlowState",
    "MinCutResult",
    "extract_min_cut_sides",
    "min_cut",
    "multi_sink_min_cut",
    "RunMetrics",
    "SizePair",
    "oc_gomory_hu",
    "OcTree",
    "extract_valid_cuts",
    "choose_k",
    "ordered_cuts",
    "update_kbar",
    "all_pairs_min_cut",
    "check_cut_tree",
    "check_oc_tree",
    "CutTree",
    "PartitionTree",
    "auxiliary_graph",
]
