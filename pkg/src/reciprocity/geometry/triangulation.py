"""Regular triangulations by random lifting, and what they are used for:
the Möbius function of the triangulation's face poset and an Ehrhart series
assembled from open simplices.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from ..algebra import Polynomial, RationalGF, gf_equal, series_to_gf
from ..linalg import solve_affine
from ..poset import Poset, mobius
from .polytope import Polytope, ehrhart, lattice_count, lattice_points, simplex_volume
from .simplex import Simplex, simplex_ehrhart_series, simplex_h_vectors

REDRAW_BUDGET = 100


class TriangulationError(RuntimeError):
    pass


@dataclass(frozen=True)
class PhiFace:
    """Element of the triangulation face poset; ``vertices is None`` marks the top."""

    vertices: frozenset | None
    dim: int

    @property
    def is_top(self) -> bool:
        return self.vertices is None


@dataclass
class Triangulation:
    polytope: Polytope
    simplices: list[frozenset]  # vertex-index sets, each of size dim + 1
    lifting: tuple[int, ...] = ()
    seed: int | None = None
    attempts: int = 1
    _faces: list[PhiFace] = field(default=None, repr=False)

    def simplex(self, s: frozenset) -> Simplex:
        return Simplex([self.polytope.vertices[i] for i in sorted(s)])

    def face_poset(self) -> tuple[list[PhiFace], Poset]:
        """Φ: every face (∅ included) of every simplex, plus a top of dimension d+1."""
        if self._faces is None:
            seen = set()
            for s in self.simplices:
                for k in range(len(s) + 1):
                    for sub in combinations(sorted(s), k):
                        seen.add(frozenset(sub))
            faces = [PhiFace(f, len(f) - 1) for f in sorted(seen, key=lambda f: (len(f), sorted(f)))]
            faces.append(PhiFace(None, self.polytope.dim + 1))
            self._faces = faces
        faces = self._faces

        def leq(a: PhiFace, b: PhiFace) -> bool:
            if b.is_top:
                return True
            if a.is_top:
                return False
            return a.vertices < b.vertices

        return faces, Poset.from_leq(faces, leq)

    def on_boundary(self, face: frozenset) -> bool:
        """A nonempty face lies in ∂P iff one facet of P holds all its vertices."""
        p = self.polytope
        ys = [p.project(p.vertices[i]) for i in face]
        return any(all(f.slack(y) == 0 for y in ys) for f in p.facets)

    def normalized_volumes(self) -> list[Fraction]:
        """``|det|`` per simplex in the projected coordinates (lattice-normalized
        when ``p`` is full-dimensional)."""
        p = self.polytope
        return [
            simplex_volume([p.project(p.vertices[i]) for i in sorted(s)]) for s in self.simplices
        ]


def _lower_facets(ys: list[tuple[Fraction, ...]], lift: Sequence[int], r: int):
    """Lower facets of the lifted configuration; None if one is not a simplex."""
    out = []
    for sub in combinations(range(len(ys)), r + 1):
        # affine function a . y + c through the lifted points of sub
        A = [list(ys[i]) + [1] for i in sub]
        sol = solve_affine(A, [lift[i] for i in sub])
        if sol is None or sol[1]:
            continue  # sub not affinely independent
        coef = sol[0]
        below = False
        tight = False
        for j in range(len(ys)):
            if j in sub:
                continue
            val = sum((a * b for a, b in zip(coef, list(ys[j]) + [1])), Fraction(0))
            if lift[j] < val:
                below = True
                break
            if lift[j] == val:
                tight = True
        if below:
            continue
        if tight:
            return None
        out.append(frozenset(sub))
    return out


def regular_triangulation(p: Polytope, seed: int = 0) -> Triangulation:
    """Project the lower facets of a randomly lifted copy of ``p``.

    Heights are integers in ``[1, 1000 n^2]`` drawn from ``random.Random(seed)``;
    if some lower facet is not a simplex the heights are redrawn, at most
    ``REDRAW_BUDGET`` times.
    """
    r = p.dim
    n = len(p.vertices)
    ys = [p.project(v) for v in p.vertices]
    if r == 0:
        return Triangulation(p, [frozenset({0})], (0,), seed, 1)
    rng = random.Random(seed)
    for attempt in range(1, REDRAW_BUDGET + 1):
        lift = tuple(rng.randint(1, 1000 * n * n) for _ in range(n))
        simplices = _lower_facets(ys, lift, r)
        if simplices is not None:
            return Triangulation(p, sorted(simplices, key=sorted), lift, seed, attempt)
    raise TriangulationError(f"no generic lifting found in {REDRAW_BUDGET} draws")


def triangulation_mobius_witness(tri: Triangulation):
    """First pair of Φ where mu disagrees with the closed form, else None.

    Closed form for ``G ⊆ F``: 0 if F is the top and G is ∅ or lies in ∂P,
    otherwise ``(-1)^(dim F - dim G)``.
    """
    faces, poset = tri.face_poset()
    mu = mobius(poset)
    for i, g in enumerate(faces):
        for j, f in enumerate(faces):
            if not poset.leq(i + 1, j + 1):
                continue
            if f.is_top and not g.is_top and (not g.vertices or tri.on_boundary(g.vertices)):
                expected = 0
            else:
                expected = (-1) ** (f.dim - g.dim)
            if mu(i + 1, j + 1) != expected:
                return (g, f, mu(i + 1, j + 1), expected)
    return None


def triangulation_mobius_check(tri: Triangulation) -> bool:
    return triangulation_mobius_witness(tri) is None


def count_by_open_faces(tri: Triangulation, t: int) -> int:
    """``sum_F #(relint(tF) ∩ Z^n)`` over the nonempty faces of the triangulation."""
    faces, _ = tri.face_poset()
    total = 0
    for f in faces:
        if f.is_top or not f.vertices:
            continue
        total += lattice_count(tri.simplex(f.vertices), t, interior=True)
    return total


def count_by_mobius(tri: Triangulation, t: int) -> int:
    """``(-1)^d sum_F (-1)^dim F ehr_F(t)`` over all nonempty faces F.

    Grouping the closed faces by open faces, the coefficient of
    ``ehr_{G°}`` is ``sum_{F >= G} (-1)^dim F``, which the Möbius values of
    Φ make ``(-1)^d`` for interior G and 0 on the boundary; so this is the
    interior count of ``tP``.
    """
    faces, _ = tri.face_poset()
    d = tri.polytope.dim
    total = 0
    for f in faces:
        if f.is_top or not f.vertices:
            continue
        total += (-1) ** f.dim * lattice_count(tri.simplex(f.vertices), t)
    return (-1) ** d * total


def uncovered_points(tri: Triangulation, t: int) -> list[tuple[int, ...]]:
    """Lattice points of ``tP`` that lie in no simplex (should be empty)."""
    simplices = [tri.simplex(s) for s in tri.simplices]
    return [x for x in lattice_points(tri.polytope, t) if not any(s.contains(x, t) for s in simplices)]


# ---------------------------------------------------------------------------
# Ehrhart series


def ehrhart_series_from_polynomial(p: Polytope) -> RationalGF:
    """Numerator ``(1-z)^(d+1) sum_{t<=d} ehr(t) z^t`` truncated at degree d."""
    if not p.is_lattice():
        raise ValueError("Ehrhart series here is for lattice polytopes")
    q = ehrhart(p).as_polynomial()
    d = p.dim
    prefix = [int(q(t)) for t in range(d + 1)]
    return series_to_gf(prefix, d, [1] * (d + 1))


def ehrhart_series_from_triangulation(tri: Triangulation) -> RationalGF:
    """``1 + sum_F h~_F(z) / (1-z)^(dim F + 1)`` over nonempty faces of Φ."""
    faces, _ = tri.face_poset()
    total = RationalGF(Polynomial([1]))
    for f in faces:
        if f.is_top or not f.vertices:
            continue
        _, ht = simplex_h_vectors(tri.simplex(f.vertices))
        total = total + RationalGF(ht, [1] * (f.dim + 1))
    return total


def ehrhart_series(p: Polytope, method: str = "both", seed: int = 0) -> RationalGF:
    """Ehrhart series ``1 + sum_{t>0} ehr(t) z^t`` of a lattice polytope.

    ``method`` is ``"polynomial"``, ``"triangulation"`` or ``"both"`` (the two
    routes must agree or ArithmeticError is raised).
    """
    if not p.is_lattice():
        raise ValueError("Ehrhart series here is for lattice polytopes")
    if method == "polynomial":
        return ehrhart_series_from_polynomial(p)
    tri_gf = ehrhart_series_from_triangulation(regular_triangulation(p, seed))
    if method == "triangulation":
        return tri_gf
    if method != "both":
        raise ValueError(f"unknown method {method!r}")
    poly_gf = ehrhart_series_from_polynomial(p)
    if not gf_equal(poly_gf, tri_gf):
        raise ArithmeticError("triangulation and interpolation routes disagree")
    if len(p.vertices) == p.dim + 1:
        if not gf_equal(poly_gf, simplex_ehrhart_series(Simplex(p.vertices))):
            raise ArithmeticError("parallelepiped route disagrees for a simplex")
    return poly_gf


def normalized_volume_from_triangulation(tri: Triangulation) -> Fraction:
    return sum(tri.normalized_volumes(), Fraction(0))
