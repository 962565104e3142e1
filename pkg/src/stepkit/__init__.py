"""Desk-scale toolkit for stepping-up constructions on uniform hypergraphs.

Subpackages cover binary structures of integer sets, structure types and
their matching, stepping-up edge rules, exact avoidance numbers, dyadic
partitions, explicit designs, oriented hypergraphs with the transversal-edge
property, and a CLI tying the pieces together.
"""

from .avoidance import AvoidanceQuery, depth1_bound, f_bruteforce, f_exact, g_max
from .binary_structure import (
    BinaryStructureTree,
    binary_structure,
    classify_monotone,
    delta_sequence,
    level_set,
    split,
    top_splitting_level,
)
from .constructions import (
    OrderedHypergraph,
    doubling_graph,
    expansion,
    fano,
    ordered_expansion,
    parity_partition_scan,
    pg_lines,
)
from .dyadic import (
    DyadicDecomposition,
    dyadic_decompose,
    greedy_bound_check,
    is_dyadic,
    ordering_pi,
    two_color_bound_witness,
)
from .hypergraph import (
    BudgetExhausted,
    EmbeddingWitness,
    Hypergraph,
    berge_girth_exceeds,
    complement,
    contains_copy,
    independence_number,
    is_linear,
    reverse,
)
from .stepping_up import SteppedUpGraph, left_step_edge, prop_step_up, right_step_edge, step_up
from .structure_types import (
    TypeTree,
    is_monotone_type,
    is_of_type,
    make_caterpillar,
    make_tab,
    parse_type,
    serialize_type,
)
from .transversal import (
    OrientedHypergraph,
    SearchConfig,
    blowup,
    count_potential_edges,
    phi_star,
    sample_linear_oriented,
    sample_oriented,
    verify_transversal_property,
)

__version__ = "0.1.0"
