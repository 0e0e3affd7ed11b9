import random
from fractions import Fraction

import pytest

from reciprocity.algebra import Polynomial
from reciprocity.arrangement import Arrangement, Hyperplane, regions_deletion_restriction, regions_zaslavsky
from reciprocity.geometry import Polytope, cube_points, lattice_count
from reciprocity.graph_coloring import (
    Graph,
    InsideOutPolytope,
    acyclic_orientations,
    chromatic_polynomial,
    closed_cube_pairs,
    coloring_iop,
    coloring_reciprocity_check,
    coloring_reciprocity_witness,
    compatible_pairs,
    inside_out_counts,
    inside_out_identity,
    open_cube_colorings,
    proper_colorings_brute,
    region_orientation_bijection,
)

T = Polynomial([0, 1])
K2, K3 = Graph.complete(2), Graph.complete(3)
C4 = Graph.cycle(4)


def test_chromatic_examples():
    assert chromatic_polynomial(K3) == T * (T - 1) * (T - 2)
    assert chromatic_polynomial(Graph(1)) == T
    assert chromatic_polynomial(C4) == (T - 1) ** 4 + (T - 1)
    assert chromatic_polynomial(K3)(-1) == -6


def test_brute_force_examples():
    assert proper_colorings_brute(K3, 3) == 6
    assert proper_colorings_brute(Graph(3), 4) == 4**3
    assert proper_colorings_brute(C4, 2) == 2


def test_acyclic_orientation_examples():
    assert len(acyclic_orientations(K3)) == 6
    assert len(acyclic_orientations(K2)) == 2
    assert len(acyclic_orientations(C4)) == 14


def test_loops_and_parallel_edges():
    g = Graph(2, [(1, 2), (2, 1), (1, 1)])
    assert g.edges == ((1, 2),) and g.has_loop
    assert chromatic_polynomial(g) == Polynomial()
    assert acyclic_orientations(g) == []
    with pytest.raises(ValueError):
        coloring_reciprocity_witness(g, 2)


def test_compatible_pair_examples():
    assert compatible_pairs(K3, 1) == 6
    assert compatible_pairs(K2, 2) == 6
    assert compatible_pairs(Graph(3), 4) == 4**3


def test_orientation_to_dot():
    (o, *_rest) = acyclic_orientations(K2)
    assert o.to_dot("K2").startswith("digraph K2 {")


def test_square_with_diagonal():
    square = Polytope(cube_points(2))
    diag = Arrangement(2, [Hyperplane((1, -1), 0)])
    iop = InsideOutPolytope(square, diag)
    assert len(iop.realized_regions()) == 2
    assert inside_out_counts(iop, 2) == (6, 12)


def test_empty_arrangement_counts_every_point():
    square = Polytope(cube_points(2))
    iop = InsideOutPolytope(square, Arrangement(2))
    for t in range(1, 5):
        n = lattice_count(square, t)
        assert inside_out_counts(iop, t) == (n, n)


def test_region_missing_from_polytope_is_not_counted():
    # the line x + y = 3/2 cuts the unit square, x + y = 5 misses it
    square = Polytope(cube_points(2))
    arr = Arrangement(2, [Hyperplane((1, 1), Fraction(3, 2)), Hyperplane((1, 1), 5)])
    iop = InsideOutPolytope(square, arr)
    assert len(iop.realized_regions()) == 2


def test_k2_six_colors_in_open_square():
    # six colors: lattice points of 7 * (0,1)^2 off the diagonal
    assert coloring_iop(K2).counts(7, interior=True)[0] == 30
    assert open_cube_colorings(K2, 6) == 30 == chromatic_polynomial(K2)(6)


def test_reciprocity_examples():
    assert coloring_reciprocity_check(K3, 3)
    assert coloring_reciprocity_check(K2, 4)
    p3 = Graph.path(3)
    assert chromatic_polynomial(p3) == T * (T - 1) ** 2
    assert coloring_reciprocity_check(p3, 3)


def test_greene_multiplicities_match_pairs():
    for g in (K3, C4, Graph.path(4)):
        for t in range(1, 4):
            assert closed_cube_pairs(g, t) == compatible_pairs(g, t)


def test_inside_out_identity_small_graphs():
    for g in (K2, K3, Graph.path(3), C4):
        assert inside_out_identity(coloring_iop(g), 4)


def test_random_suite_invariants():
    rng = random.Random(4)
    for _ in range(20):
        g = Graph.random(rng, max_nodes=5)
        c = chromatic_polynomial(g)
        aos = len(acyclic_orientations(g))
        assert aos == (-1) ** g.n * c(-1)
        assert aos == regions_zaslavsky(g.arrangement()) == regions_deletion_restriction(g.arrangement())
        assert all(c(t) == proper_colorings_brute(g, t) for t in range(1, 6))
        assert all(compatible_pairs(g, t) == (-1) ** g.n * c(-t) for t in range(1, 5))


def test_region_orientation_bijection():
    for g in (K3, C4, Graph.path(4), Graph(4, [(1, 2), (3, 4)])):
        assert region_orientation_bijection(g)
