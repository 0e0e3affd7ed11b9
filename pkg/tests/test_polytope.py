import random
from fractions import Fraction
from itertools import product
from math import comb, floor

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from reciprocity.algebra import Polynomial
from reciprocity.geometry import (
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
    standard_simplex_points,
)
from reciprocity.geometry.polytope import _facets, facets_brute
from reciprocity.suites import random_lattice_polytope

T = Polynomial([0, 1])
TRIANGLE = Polytope(standard_simplex_points(2))


def naive_count(p: Polytope, t: int, interior: bool = False) -> int:
    """Loop over the integer box of tP and test membership point by point."""
    lo = [floor(min(v[i] for v in p.vertices) * t) for i in range(p.ambient)]
    hi = [floor(max(v[i] for v in p.vertices) * t) for i in range(p.ambient)]
    return sum(
        1 for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))) if p.contains(x, t, interior)
    )


def test_triangle_facets():
    got = {(f.normal, f.offset) for f in TRIANGLE.facets}
    assert got == {((-1, 0), 0), ((0, -1), 0), ((1, 1), 1)}


def test_point_and_midpoint_removal():
    p = hull([(3, 4)])
    assert p.dim == 0 and p.facets == ()
    seg = hull([(0, 0), (2, 0), (1, 0)])
    assert seg.vertices == ((0, 0), (2, 0)) and seg.dim == 1


def test_lattice_count_examples():
    assert lattice_count(TRIANGLE, 2) == 6
    assert lattice_count(TRIANGLE, 3, interior=True) == 1
    assert lattice_count(Polytope(cube_points(2)), 4) == 25
    assert lattice_count(TRIANGLE, 0) == 1


def test_triangle_ehrhart_and_reciprocity():
    q = ehrhart(TRIANGLE)
    assert q.period == 1 and q.as_polynomial() == (T + 1) * (T + 2) * Fraction(1, 2)
    assert q(-1) == 0 and q(-2) == 0
    assert ehrhart_reciprocity_check(TRIANGLE, 10)
    assert [lattice_count(TRIANGLE, t, interior=True) for t in range(1, 11)] == [comb(t - 1, 2) for t in range(1, 11)]


def test_point_is_constant_one():
    p = Polytope([(0, 0)])
    assert ehrhart(p).as_polynomial() == Polynomial([1])
    assert ehrhart_reciprocity_check(p, 5)


def test_half_integral_segment_has_period_two():
    q = ehrhart(Polytope([(0,), (Fraction(1, 2),)]))
    assert q.period == 2
    assert q.constituents[0] == T * Fraction(1, 2) + 1
    assert q.constituents[1] == T * Fraction(1, 2) + Fraction(1, 2)
    assert [q(t) for t in range(8)] == [t // 2 + 1 for t in range(8)]


def test_cube():
    cube = Polytope(cube_points(3))
    assert ehrhart(cube).as_polynomial() == (T + 1) ** 3
    assert ehrhart_reciprocity_check(cube, 6)
    assert all(lattice_count(cube, t, interior=True) == (t - 1) ** 3 for t in range(1, 7))
    fl = face_lattice(cube)
    assert fl.f_polynomial() == Polynomial([8, 12, 6, 1])
    assert euler_characteristic(cube) == 1
    assert fl.mobius_matches_closed_form()


def test_small_face_lattices():
    seg = face_lattice(Polytope([(0,), (1,)]))
    assert [f.dim for f in seg.faces] == [-1, 0, 0, 1]
    tri = face_lattice(TRIANGLE)
    assert len(tri.faces) == 1 + 3 + 3 + 1
    assert euler_characteristic(TRIANGLE) == 3 - 3 + 1
    assert euler_characteristic(Polytope([(1, 1, 1)])) == 1


def test_lower_dimensional_polytope_in_space():
    # a triangle sitting in the plane x + y + z = 2 of R^3
    p = Polytope([(2, 0, 0), (0, 2, 0), (0, 0, 2)])
    assert p.dim == 2
    assert [lattice_count(p, t) for t in range(4)] == [naive_count(p, t) for t in range(4)]
    assert ehrhart(p).as_polynomial() == (2 * T + 1) * (2 * T + 2) * Fraction(1, 2)
    assert reciprocity_witness(p, 6) is None


def test_lattice_points_lie_in_dilate():
    pts = lattice_points(TRIANGLE, 3)
    assert len(pts) == 10 and all(TRIANGLE.contains(x, 3) for x in pts)


def test_normalized_volume():
    assert normalized_volume(Polytope(cube_points(3))) == 6
    assert normalized_volume(Polytope([(-1,), (2,)])) == 3


def test_negative_dilation_rejected():
    with pytest.raises(ValueError):
        lattice_count(TRIANGLE, -1)


def test_scan_matches_naive_count_on_random_polytopes():
    rng = random.Random(99)
    for _ in range(12):
        p = random_lattice_polytope(rng, coord=2)
        for t in range(0, 4):
            for interior in (False, True):
                assert lattice_count(p, t, interior) == naive_count(p, t, interior)


def test_rational_polytope_counts():
    p = Polytope([(0, 0), (Fraction(1, 2), 0), (0, Fraction(1, 3))])
    q = ehrhart(p, verify_horizon=14)
    assert q.period == 6
    assert all(q(t) == naive_count(p, t) for t in range(13))
    assert reciprocity_witness(p, 12) is None


points_2d = st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=3, max_size=8)


@settings(max_examples=50, deadline=None)
@given(points_2d)
def test_gift_wrapping_matches_brute_force(pts):
    p = Polytope(pts)
    if p.dim != 2:
        return
    ys = sorted({tuple(Fraction(c) for c in q) for q in pts})
    assert _facets(ys, 2) == facets_brute(ys, 2)


def test_gift_wrapping_matches_brute_force_3d():
    rng = random.Random(3)
    for _ in range(40):
        ys = sorted({tuple(Fraction(rng.randint(-2, 2)) for _ in range(3)) for _ in range(rng.randint(4, 9))})
        if Polytope(ys).dim == 3:
            assert _facets(ys, 3) == facets_brute(ys, 3)


def test_random_reciprocity():
    rng = random.Random(17)
    for _ in range(15):
        p = random_lattice_polytope(rng)
        assert ehrhart_reciprocity_check(p, 8), p
