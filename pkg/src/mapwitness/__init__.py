"""Recognize half-squares and map graphs that have witnesses of large girth.

A witness for ``G`` is a bipartite graph on ``V(G)`` plus a set of points whose
half-square on ``V(G)`` is ``G``. The recognizers build the vertex-clique
incidence graph ``B_G`` and either certify it as a witness or return an
obstruction that can be checked independently.
"""

from .cliques import CapExceeded, CliqueSet, clique_count_bound_check, maximal_cliques
from .detect import (
    Obstruction,
    ObstructionKind,
    biconnected_components,
    find_diamond,
    find_short_induced_cycle,
    is_block_graph,
    is_diamond_free,
    validate_obstruction,
)
from .formats import (
    GraphFormatError,
    from_edgelist,
    from_graph6,
    from_labeled_edgelist,
    to_edgelist,
    to_graph6,
    witness_from_text,
    witness_to_dot,
    witness_to_text,
)
from .graph import (
    INFINITE,
    BipartiteGraph,
    Graph,
    components,
    disjoint_union,
    find_cycle_shorter_than,
    girth,
    induced_subgraph,
    is_connected,
    shortest_cycle,
)
from .incidence import (
    POINT_SIDE,
    VERTEX_SIDE,
    build_subdivision,
    build_vertex_clique_incidence,
    half_square,
    is_half_square_of,
)
from .planarity import PlanarityResult, is_kuratowski_subdivision, is_planar, kuratowski_subgraph
from .recognizer import (
    GirthParameterError,
    GirthParameterTooSmall,
    Mode,
    OddGirthParameter,
    RecognitionReport,
    SoundnessError,
    Verdict,
    recognize,
    recognize_half_square_girth,
    recognize_map_witness_girth,
    recognize_tree_witness,
    report_problem,
)

__version__ = "0.1.0"

__all__ = [
    "INFINITE",
    "BipartiteGraph",
    "CapExceeded",
    "CliqueSet",
    "GirthParameterError",
    "GirthParameterTooSmall",
    "Graph",
    "GraphFormatError",
    "Mode",
    "Obstruction",
    "ObstructionKind",
    "OddGirthParameter",
    "POINT_SIDE",
    "PlanarityResult",
    "RecognitionReport",
    "SoundnessError",
    "VERTEX_SIDE",
    "Verdict",
    "biconnected_components",
    "build_subdivision",
    "build_vertex_clique_incidence",
    "clique_count_bound_check",
    "components",
    "disjoint_union",
    "find_cycle_shorter_than",
    "find_diamond",
    "find_short_induced_cycle",
    "from_edgelist",
    "from_graph6",
    "from_labeled_edgelist",
    "girth",
    "half_square",
    "induced_subgraph",
    "is_block_graph",
    "is_connected",
    "is_diamond_free",
    "is_half_square_of",
    "is_kuratowski_subdivision",
    "is_planar",
    "kuratowski_subgraph",
    "maximal_cliques",
    "recognize",
    "recognize_half_square_girth",
    "recognize_map_witness_girth",
    "recognize_tree_witness",
    "report_problem",
    "shortest_cycle",
    "to_edgelist",
    "to_graph6",
    "validate_obstruction",
    "witness_from_text",
    "witness_to_dot",
    "witness_to_text",
]
