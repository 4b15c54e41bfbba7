"""Depth, dimension and projective dimension of edge ideals of graphs.

Core invariants: dim S/I(G) is the independence number; depth comes from
the chordal vertex-cover/recursion routes or from reduced homology of
induced independence complexes over a prime field; pdim + depth = n.
"""

from .bouquet import (
    Bouquet,
    BouquetFamily,
    max_semi_strongly_disjoint_flowers,
    max_strongly_disjoint_flowers,
    validate_family,
)
from .canon import are_isomorphic, canonical_form
from .chordal import (
    NotChordalError,
    chordal_depth_cover,
    chordal_depth_recursive,
    chordal_pdim_cover,
    dim_recursion,
    find_peo,
    is_chordal,
)
from .enumeration import connected_graphs
from .graph import (
    Graph,
    GraphError,
    complete_graph,
    cycle_graph,
    empty_graph,
    graph_from_edges,
    independence_number,
    induced_subgraph,
    is_connected,
    max_minimal_vertex_cover,
    maximal_independent_sets,
    maximum_independent_set,
    path_graph,
    star_graph,
)
from .graph6 import Graph6Error, emit_graph6, parse_graph6
from .homology import (
    HomologyProfile,
    IndependenceComplex,
    depth,
    hochster_profile,
    pdim_hochster,
    reduced_betti,
)
from .pairs import (
    PairSet,
    chordal_witness,
    cminus,
    cprime,
    cstar,
    f_value,
    witness_search,
)
from .survey import SurveyResult, analyze_pair, compare, survey

__version__ = "0.1.0"
