"""Distinguishing numbers and indices of point-attaching graph families."""
from .automorphism import AutGroup, aut_order, enumerate_automorphisms, group_order_formula_dutch, orbits
from .distinguishing import (
    DistResult,
    distinguishing_index,
    distinguishing_number,
    is_distinguishing_edge,
    is_distinguishing_vertex,
)
from .generators import FamilySpec, Part, family
from .graph import EdgeLabeling, Graph, VertexLabeling, build, induced_edge_perm, is_automorphism

__all__ = [
    "AutGroup", "DistResult", "EdgeLabeling", "FamilySpec", "Graph", "Part", "VertexLabeling",
    "aut_order", "build", "distinguishing_index", "distinguishing_number", "enumerate_automorphisms",
    "family", "group_order_formula_dutch", "induced_edge_perm", "is_automorphism",
    "is_distinguishing_edge", "is_distinguishing_vertex", "orbits",
]
