"""Soft and strong Barycentric refinement of Whitney complexes, with manifold
recognition, spectral experiments and coloring constructions."""

from .graph import (
    Graph,
    SimplicialComplex,
    clique_number,
    euler_characteristic,
    f_vector,
    graph_distance,
    graph_join,
    is_isomorphic,
    unit_sphere,
    whitney_complex,
)
from .manifold import ManifoldReport, WorkCapExceeded, classify, is_ball, is_contractible, is_sphere
from .refine import (
    FaceClassification,
    NotAManifoldError,
    RefinedGraph,
    barycentric,
    classify_faces,
    dual_circle,
    dual_graph,
    edge_refine,
    refine_facet_edges,
    refine_graph,
    soft_barycentric,
    soft_whitney,
)

__version__ = "0.1.0"
