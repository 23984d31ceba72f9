"""Exact combinatorics of basis-indexed bipartite graphs.

Enumeration and counting, the basis-respecting partial order with Hasse
diagrams and lattice diagnostics, two triangular categories (bipartite
graphs and strictly increasing maps) with subobject/pullback machinery,
and exact-rational moebius inversion over bounded fragments.
"""

from .bigraph import (
    BasisOutOfRange,
    BipartiteGraph,
    DuplicateEdge,
    EdgeViolatesBipartition,
    GraphError,
    admissible_edges,
    all_graphs,
    count_all,
    count_with_basis,
    graph_from_json_dict,
    graph_to_json_dict,
    graphs_with_basis,
    make_graph,
)
from .category import (
    BIPARTITE,
    DELTA,
    BipartiteCategory,
    CompositionMismatch,
    DeltaCategory,
    DeltaMap,
    EpiSearch,
    NotComparable,
    NotMonomorphic,
    Pullback,
    Pushout,
    PushoutSearch,
    TriangularCategory,
    check_boolean_iso,
    check_moebius_axioms,
    compose_graphs,
    delta_compose,
    delta_hom,
    delta_identity,
    delta_map_from_json_dict,
    delta_map_to_json_dict,
    identity_graph,
    is_epi_bounded,
    is_mono,
    leq_factor,
    make_delta_map,
    pullback_search,
    pushout_search_bounded,
    subobject_leq,
    subobject_poset,
)
from .incidence import (
    BoundMismatch,
    FactorizationList,
    IncidenceFunction,
    NotInvertible,
    convolve,
    delta_function,
    factorizations,
    invert,
    moebius_function,
    poset_moebius,
    zeta_function,
)
from .order import (
    DEFAULT_GUARD,
    HasseDiagram,
    MismatchedVertexCount,
    Poset,
    TooLarge,
    build_poset,
    leq,
)

__version__ = "0.1.0"
