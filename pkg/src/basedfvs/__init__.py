"""Certifying feedback vertex set / cycle packing solver for based planar graphs."""

from .embedding import (
    Face,
    PlanarEmbeddedGraph,
    delete_vertex,
    smooth_degree2,
    trace_faces,
    validate,
)
from .errors import BasedFvsError, InvariantViolation, NotBasedPlanar, TooLarge
from .recognition import AdjacencyMode, find_base_faces, is_based_planar, is_halin
from .solver import Certificate, solve, step_classify, verify_certificate
from .triangles import GoodTriangle, all_good_triangles, claim1_find_good_triangle, find_good_triangle

__all__ = [
    "AdjacencyMode",
    "BasedFvsError",
    "Certificate",
    "Face",
    "GoodTriangle",
    "InvariantViolation",
    "NotBasedPlanar",
    "PlanarEmbeddedGraph",
    "TooLarge",
    "all_good_triangles",
    "claim1_find_good_triangle",
    "delete_vertex",
    "find_base_faces",
    "find_good_triangle",
    "is_based_planar",
    "is_halin",
    "smooth_degree2",
    "solve",
    "step_classify",
    "trace_faces",
    "validate",
    "verify_certificate",
]
