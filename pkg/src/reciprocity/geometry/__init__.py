"""Polytopes, lattice-point enumeration, Ehrhart theory, triangulations."""

from .polytope import (
    Face,
    FaceLattice,
    Facet,
    Polytope,
    cube_points,
    ehrhart,
    ehrhart_reciprocity_check,
    euler_characteristic,
    face_lattice,
    hull,
    lattice_count,
    lattice_points,
    normalized_volume,
    reciprocity_witness,
    simplex_volume,
    standard_simplex_points,
)
from .simplex import (
    HalfOpenParallelepiped,
    Simplex,
    simplex_ehrhart_series,
    simplex_h_vectors,
)
from .triangulation import (
    PhiFace,
    Triangulation,
    TriangulationError,
    count_by_mobius,
    count_by_open_faces,
    ehrhart_series,
    ehrhart_series_from_polynomial,
    ehrhart_series_from_triangulation,
    normalized_volume_from_triangulation,
    regular_triangulation,
    triangulation_mobius_check,
    triangulation_mobius_witness,
    uncovered_points,
)
