"""Exact metric and edge metric dimension of graphs, with the subdivided-clique
and chain constructions used to separate the two."""

from .constructions import (ChainLayout, SubdivisionLabeling, chain, chain_edge_basis_candidate,
                            chain_metric_basis_candidate, complete, complete_minus_matching,
                            cycle, find_p3_packing, lemma1_q, path, star, subdivide,
                            theorem2_generator, theorem3_generator, torus)
from .dsl import SpecError, eval_spec, parse_spec
from .estimator import ResolvingSet
from .graph import (DistanceMatrix, Graph, GraphFormatError, all_pairs_distances,
                    articulation_points, edge_vertex_distance, is_connected, parse_edge_list,
                    serialize_edge_list)
from .resolver import (BoundaryPiece, Certificate, Kind, SolveResult, certify_no_generator_of_size,
                       exact_dimension, greedy_generator, is_generator, make_piece, naive_oracle,
                       piece_lower_bound, signature_of, twin_lower_bound)

__all__ = [
    "BoundaryPiece", "Certificate", "ChainLayout", "DistanceMatrix", "Graph", "GraphFormatError",
    "Kind", "ResolvingSet", "SolveResult", "SpecError", "SubdivisionLabeling",
    "all_pairs_distances", "articulation_points", "certify_no_generator_of_size", "chain",
    "chain_edge_basis_candidate", "chain_metric_basis_candidate", "complete",
    "complete_minus_matching", "cycle", "edge_vertex_distance", "eval_spec", "exact_dimension",
    "find_p3_packing", "greedy_generator", "is_connected", "is_generator", "lemma1_q",
    "make_piece", "naive_oracle", "parse_edge_list", "parse_spec", "path", "piece_lower_bound",
    "serialize_edge_list", "signature_of", "star", "subdivide", "theorem2_generator",
    "theorem3_generator", "torus", "twin_lower_bound",
]

__version__ = "0.1.0"
