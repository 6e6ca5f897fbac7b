"""Exact construction and certification of generating sets for generalized
splines on edge-labeled graphs."""

from .algebra import Poly, parse_poly
from .graph import CycleGraph, EdgeLabeledGraph
from .spline import GeneratingSet, Spline, degree_sequence, is_triangular, verify_gkm
from .mgs_general import UnsupportedGraphError, mgs_dispatch, mgs_one_label, mgs_two_labels
from .mgs_cycle import mgs_cycle_quadratic, predicted_degree_sequence
from .oracle import certify_basis, in_module_span, spline_space_dimension

__all__ = [
    "Poly", "parse_poly", "CycleGraph", "EdgeLabeledGraph", "GeneratingSet", "Spline",
    "degree_sequence", "is_triangular", "verify_gkm", "UnsupportedGraphError",
    "mgs_dispatch", "mgs_one_label", "mgs_two_labels", "mgs_cycle_quadratic",
    "predicted_degree_sequence", "certify_basis", "in_module_span", "spline_space_dimension",
]
