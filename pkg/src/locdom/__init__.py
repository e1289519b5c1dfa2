"""Location-domination in graphs and their complements.

Exact solvers for the location-domination number of a graph, of its
complement and the global variant; the labelled graph associated with an
LD-set; bipartite constructions; and exhaustive verification suites.
"""

from .assoc import AssocGraph, build_associated, check_properties, edges_with_label, select_H, to_dot
from .cactus import CactusStats, cactus_stats, is_cactus, tightness_check
from .closed_forms import closed_form
from .enumerate import canonical_form, enumerate_connected_graphs
from .extremal import construct_extremal, construct_gap_minus, construct_gap_zero, gap_plus_feasible
from .families import FamilySpec, generate_family
from .graph import Bipartition, Graph, GraphError, bipartition, complement, make_graph
from .graph6 import decode_graph6, encode_graph6
from .solver import (
    analyze,
    dominating_vertex,
    global_ld_number,
    is_dominating,
    is_global_ld_set,
    is_ld_set,
    ld_codes,
    ld_number,
    ld_number_complement,
)

__version__ = "0.1.0"
