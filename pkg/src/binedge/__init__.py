"""Depth, dimension and local cohomology of binomial edge ideals, computed
from the poset of primes generated by their minimal primary decomposition."""
from .bounds import (
    BoundsReport,
    bn_upper_bound,
    bounds_report,
    check_depth4_characterization,
    component_lower_bound,
    faltings_lower_bound,
    family_oracle,
)
from .depthengine import LCTable, depth, dimension, interval_betti, lc_table, multiplicities
from .errors import ContractViolation, InvariantViolation, ResourceLimitExceeded
from .graphcore import (
    Graph,
    GraphParseError,
    all_labeled_graphs,
    complete_bipartite,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    edgeless_graph,
    is_block_graph,
    is_cut_vertex,
    join_2k1_witness,
    parse_edge_list,
    parse_graph6,
    path_graph,
    remove_vertices,
    to_edge_list,
    to_graph6,
    vertex_connectivity,
)
from .homology import QQ, BettiVector, FieldSpec, order_complex, rank_exact, reduced_betti
from .ideals import (
    PrimeIdeal,
    SumIdeal,
    add_p_empty,
    contains,
    cut_sets,
    has_cut_point_property,
    ideal_sum,
    is_prime,
    minimal_primes,
    minimal_primes_of_graph,
    p_empty,
    to_prime,
)
from .poset import A, Q, FinitePoset, IdealPoset, PosetLimits, build_poset, open_interval

__version__ = "0.1.0"
