"""Exact chromatic polynomials, broken-cycle and orientation oracles, and
verification of mean-size inequalities for broken-cycle-free subgraphs."""

from .broken_cycles import (
    BrokenCycleSet,
    EdgeOrdering,
    bcf_spanning_trees,
    broken_cycles,
    simple_cycles,
    whitney_coefficient,
    whitney_coefficients,
)
from .chromatic import (
    Coefficients,
    ConsistencyError,
    b_distribution,
    chromatic_polynomial,
    coefficients,
    derivative,
    epsilon_at,
    epsilon_chordal,
    epsilon_mean,
    evaluate,
    graph_coefficients,
    harmonic,
    log_derivative,
    pole_sum,
)
from .formats import (
    GraphFormatError,
    GraphRecord,
    from_edge_list,
    from_graph6,
    iter_graphs,
    read_graphs,
    to_edge_list,
    to_graph6,
)
from .graph import (
    Graph,
    OrderedPartition,
    VertexPartition,
    build,
    complete_graph,
    components,
    connected_partitions,
    contract_edge,
    cycle_graph,
    delete_edge,
    delete_vertex,
    empty_graph,
    induced_subgraph,
    is_chordal,
    is_chordal_proper_spanning_subgraph,
    is_connected,
    is_spanning_subgraph,
    ordered_partitions,
    path_graph,
    perfect_elimination_ordering,
    star_graph,
)
from .orientations import (
    Orientation,
    acyclic_orientations,
    count_acyclic,
    count_unique_source,
    count_unique_source_with_sink,
    interp_coefficient_orientation,
    interp_coefficient_partition,
)
from .polynomial import IntPolynomial
from .verify import (
    DEFAULT_GRID,
    DVector,
    SignCertificate,
    VerificationReport,
    certify_positive_on_negatives,
    check_compare_K,
    check_compare_Q,
    check_conjecture,
    check_pos_d,
    d_vector,
    lemma51_witness,
    sweep,
    xi,
)

__version__ = "0.1.0"

__all__ = [
    "IntPolynomial",
    "BrokenCycleSet",
    "EdgeOrdering",
    "bcf_spanning_trees",
    "broken_cycles",
    "simple_cycles",
    "whitney_coefficient",
    "whitney_coefficients",
    "Coefficients",
    "ConsistencyError",
    "b_distribution",
    "chromatic_polynomial",
    "coefficients",
    "derivative",
    "epsilon_at",
    "epsilon_chordal",
    "epsilon_mean",
    "evaluate",
    "graph_coefficients",
    "harmonic",
    "log_derivative",
    "pole_sum",
    "GraphFormatError",
    "GraphRecord",
    "from_edge_list",
    "from_graph6",
    "iter_graphs",
    "read_graphs",
    "to_edge_list",
    "to_graph6",
    "Graph",
    "OrderedPartition",
    "VertexPartition",
    "build",
    "complete_graph",
    "components",
    "connected_partitions",
    "contract_edge",
    "cycle_graph",
    "delete_edge",
    "delete_vertex",
    "empty_graph",
    "induced_subgraph",
    "is_chordal",
    "is_chordal_proper_spanning_subgraph",
    "is_connected",
    "is_spanning_subgraph",
    "ordered_partitions",
    "path_graph",
    "perfect_elimination_ordering",
    "star_graph",
    "Orientation",
    "acyclic_orientations",
    "count_acyclic",
    "count_unique_source",
    "count_unique_source_with_sink",
    "interp_coefficient_orientation",
    "interp_coefficient_partition",
    "DEFAULT_GRID",
    "DVector",
    "SignCertificate",
    "VerificationReport",
    "certify_positive_on_negatives",
    "check_compare_K",
    "check_compare_Q",
    "check_conjecture",
    "check_pos_d",
    "d_vector",
    "lemma51_witness",
    "sweep",
    "xi",
]
