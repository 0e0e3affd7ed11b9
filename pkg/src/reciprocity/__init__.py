"""Exact computations around four combinatorial reciprocity theorems:
hyperplane-arrangement region counts, Ehrhart-Macdonald reciprocity for
rational polytopes, Stanley's reciprocity for chromatic polynomials and
for P-partitions.

All arithmetic is exact (``fractions.Fraction`` and integers).
"""

from .algebra import Polynomial, Quasipolynomial, RationalGF, gf_equal, gf_reciprocal, gf_series_prefix
from .arrangement import Arrangement, Hyperplane, characteristic_polynomial, regions_zaslavsky
from .geometry import Polytope, Simplex, ehrhart, lattice_count
from .graph_coloring import Graph, chromatic_polynomial, compatible_pairs
from .poset import Poset, linear_extensions, mobius
from .ppartition import PPartitionSpec, ppartition_gf, stanley_reciprocity_check

__version__ = "0.1.0"

__all__ = [
    "Polynomial",
    "Quasipolynomial",
    "RationalGF",
    "gf_equal",
    "gf_reciprocal",
    "gf_series_prefix",
    "Arrangement",
    "Hyperplane",
    "characteristic_polynomial",
    "regions_zaslavsky",
    "Polytope",
    "Simplex",
    "ehrhart",
    "lattice_count",
    "Graph",
    "chromatic_polynomial",
    "compatible_pairs",
    "Poset",
    "linear_extensions",
    "mobius",
    "PPartitionSpec",
    "ppartition_gf",
    "stanley_reciprocity_check",
]
