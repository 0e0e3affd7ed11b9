"""Rational polytopes given by vertices: H-description, lattice counts, Ehrhart
quasipolynomials, face lattices.

A polytope of intrinsic dimension ``r`` inside ``R^n`` is handled through a
coordinate projection: ``coords`` is a set of ``r`` coordinates on which the
affine hull projects bijectively, and every other coordinate is an affine
function of those. Facet inequalities are written on the projected
coordinates only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import combinations, product
from math import ceil, factorial, floor, lcm
from typing import Iterable, Sequence

import numpy as np

from ..algebra import Polynomial, Quasipolynomial, poly_interpolate
from ..linalg import det, dot, nullspace, primitive_integer, rank, rref
from ..poset import Poset, mobius
from ._scan import box_chunks, choose_dtype

Point = tuple[Fraction, ...]


@dataclass(frozen=True)
class Facet:
    """``normal . x_coords <= offset`` with ``normal`` a primitive integer vector."""

    normal: tuple[int, ...]
    offset: Fraction

    def slack(self, y: Sequence) -> Fraction:
        return self.offset - sum((a * b for a, b in zip(self.normal, y)), Fraction(0))


class Polytope:
    """Convex hull of finitely many rational points.

    Use :func:`hull` (or the constructor directly) with any point list;
    duplicates and non-extreme points are dropped.
    """

    def __init__(self, points: Iterable[Sequence]):
        pts = sorted({tuple(Fraction(c) for c in p) for p in points})
        if not pts:
            raise ValueError("a polytope needs at least one point")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise ValueError("points have mixed dimensions")
        self.ambient = n
        base = pts[0]
        diffs = [[a - b for a, b in zip(p, base)] for p in pts[1:]]
        red, piv = rref(diffs, n) if diffs else ([], [])
        self.dim = len(piv)
        self.coords: tuple[int, ...] = tuple(piv)
        self._base = base
        self._span = red  # rows: basis of the direction space, identity on coords
        self._facets = _facets(self._project_all(pts), self.dim)
        self.vertices: tuple[Point, ...] = tuple(p for p in pts if self._is_vertex(p))
        self._cache: dict[tuple[int, bool], int] = {}

    # coordinates

    def project(self, x: Sequence) -> tuple[Fraction, ...]:
        return tuple(Fraction(x[c]) for c in self.coords)

    def _project_all(self, pts):
        return [self.project(p) for p in pts]

    def lift(self, y: Sequence, t: int = 1) -> tuple[Fraction, ...]:
        """Point of the affine hull of ``t * P`` whose projection is ``y``."""
        x = [Fraction(t) * b for b in self._base]
        for k, (row, c) in enumerate(zip(self._span, self.coords)):
            step = Fraction(y[k]) - t * self._base[c]
            x = [xi + step * ri for xi, ri in zip(x, row)]
        return tuple(x)

    def in_affine_hull(self, x: Sequence, t: int = 1) -> bool:
        return self.lift(self.project(x), t) == tuple(Fraction(c) for c in x)

    @property
    def facets(self) -> tuple[Facet, ...]:
        return self._facets

    def ambient_facets(self) -> list[tuple[tuple[int, ...], Fraction]]:
        """Facet inequalities ``a . x <= b`` written in ambient coordinates."""
        out = []
        for f in self._facets:
            a = [0] * self.ambient
            for c, v in zip(self.coords, f.normal):
                a[c] = v
            out.append((tuple(a), f.offset))
        return out

    def affine_equations(self) -> list[tuple[tuple[Fraction, ...], Fraction]]:
        """Rows ``(a, b)`` with the affine hull equal to ``{a . x = b}``."""
        if self.dim == self.ambient:
            return []
        normals = nullspace(self._span, self.ambient) if self._span else _eye(self.ambient)
        return [(tuple(v), dot(v, self._base)) for v in normals]

    def _is_vertex(self, p) -> bool:
        if self.dim == 0:
            return True
        y = self.project(p)
        tight = [f.normal for f in self._facets if f.slack(y) == 0]
        return len(tight) >= self.dim and rank(tight) == self.dim

    def contains(self, x: Sequence, t: int = 1, interior: bool = False) -> bool:
        if not self.in_affine_hull(x, t):
            return False
        y = self.project(x)
        for f in self._facets:
            s = t * f.offset - sum((a * b for a, b in zip(f.normal, y)), Fraction(0))
            if s < 0 or (interior and s == 0):
                return False
        return True

    def is_lattice(self) -> bool:
        return all(c.denominator == 1 for v in self.vertices for c in v)

    @property
    def denominator(self) -> int:
        return lcm(*(c.denominator for v in self.vertices for c in v))

    def __eq__(self, other):
        return isinstance(other, Polytope) and self.vertices == other.vertices

    def __hash__(self):
        return hash(self.vertices)

    def __repr__(self):
        vs = ", ".join("(" + ",".join(str(c) for c in v) + ")" for v in self.vertices)
        return f"Polytope(dim={self.dim}, vertices=[{vs}])"


def _eye(n):
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def _facets(ys: list[tuple[Fraction, ...]], r: int) -> tuple[Facet, ...]:
    """Facets of the full-dimensional hull of ``ys`` in ``R^r``, by gift wrapping.

    A first facet comes from rotating a supporting hyperplane until its
    contact set is ``(r-1)``-dimensional. Every other facet is reached by
    rotating a known facet about one of its ridges; ridges are the facets
    of a facet, found by the same procedure one dimension down.
    """
    return _facets_of(tuple(ys), r)


@lru_cache(maxsize=4096)
def _facets_of(ys: tuple[tuple[Fraction, ...], ...], r: int) -> tuple[Facet, ...]:
    if r == 0:
        return ()
    if r == 1:
        lo = min(y[0] for y in ys)
        hi = max(y[0] for y in ys)
        return (Facet((-1,), -lo), Facet((1,), hi))
    found: dict[tuple, Facet] = {}
    first = _initial_facet(ys, r)
    found[(first.normal, first.offset)] = first
    queue = [first]
    while queue:
        f = queue.pop()
        tight = [i for i, y in enumerate(ys) if f.slack(y) == 0]
        for ridge in _ridges(ys, tight):
            g = _wrap(ys, f, ridge, tight)
            key = (g.normal, g.offset)
            if key not in found:
                found[key] = g
                queue.append(g)
    return tuple(sorted(found.values(), key=lambda f: (f.normal, f.offset)))


def _support(ys, normal) -> Facet:
    normal = primitive_integer(normal)
    return Facet(tuple(normal), max(dot(normal, y) for y in ys))


def _rotate(ys, a, tight, u) -> list[Fraction]:
    """Turn the supporting normal ``a`` towards ``u`` (orthogonal to the
    contact set ``tight``) until a new point becomes tight."""
    s0 = ys[tight[0]]
    best = None
    for i, y in enumerate(ys):
        alpha = -dot(a, [c - d for c, d in zip(y, s0)])
        if alpha == 0:
            continue
        ratio = dot(u, [c - d for c, d in zip(y, s0)]) / alpha
        if best is None or ratio > best:
            best = ratio
    return [ui + best * ai for ui, ai in zip(u, a)]


def _initial_facet(ys, r) -> Facet:
    f = _support(ys, [Fraction(int(i == 0)) for i in range(r)])
    while True:
        tight = [i for i, y in enumerate(ys) if f.slack(y) == 0]
        s0 = ys[tight[0]]
        diffs = [[c - d for c, d in zip(ys[i], s0)] for i in tight[1:]]
        if diffs and rank(diffs) == r - 1:
            return f
        a = [Fraction(c) for c in f.normal]
        u = nullspace(diffs + [a], r)[0]
        f = _support(ys, _rotate(ys, a, tight, u))


def _ridges(ys, tight) -> list[list[int]]:
    """Contact sets (indices into ``ys``) of the facets of the face ``tight``."""
    s0 = ys[tight[0]]
    diffs = [[c - d for c, d in zip(ys[i], s0)] for i in tight[1:]]
    _, piv = rref(diffs, len(s0))
    sub = [tuple(ys[i][c] for c in piv) for i in tight]
    return [
        [i for i, z in zip(tight, sub) if g.slack(z) == 0] for g in _facets(sub, len(piv))
    ]


def _wrap(ys, f: Facet, ridge, tight) -> Facet:
    """The facet meeting ``f`` in ``ridge``."""
    r = len(f.normal)
    s0 = ys[ridge[0]]
    a = [Fraction(c) for c in f.normal]
    diffs = [[c - d for c, d in zip(ys[i], s0)] for i in ridge[1:]]
    u = nullspace(diffs + [a], r)[0]
    # orient u away from the rest of f
    other = next(i for i in tight if i not in ridge)
    if dot(u, [c - d for c, d in zip(ys[other], s0)]) > 0:
        u = [-c for c in u]
    return _support(ys, _rotate(ys, a, ridge, u))


def facets_brute(ys: list[tuple[Fraction, ...]], r: int) -> tuple[Facet, ...]:
    """Oracle for :func:`_facets`: every ``r``-subset spanning a hyperplane
    with all points on one side gives a facet."""
    if r == 0:
        return ()
    found: dict[tuple, Facet] = {}
    for sub in combinations(range(len(ys)), r):
        p0 = ys[sub[0]]
        diffs = [[a - b for a, b in zip(ys[i], p0)] for i in sub[1:]]
        ns = nullspace(diffs, r) if diffs else _eye(r)
        if len(ns) != 1:
            continue
        normal = primitive_integer(ns[0])
        off = dot(normal, p0)
        vals = [dot(normal, y) for y in ys]
        if all(v <= off for v in vals):
            found[(tuple(normal), off)] = Facet(tuple(normal), off)
        elif all(v >= off for v in vals):
            neg = tuple(-a for a in normal)
            found[(neg, -off)] = Facet(neg, -off)
    return tuple(sorted(found.values(), key=lambda f: (f.normal, f.offset)))


def hull(points: Iterable[Sequence]) -> Polytope:
    return Polytope(points)


# ---------------------------------------------------------------------------
# lattice points


def lattice_count(p: Polytope, t: int, interior: bool = False) -> int:
    """``#(tP ∩ Z^n)``, or the relative-interior count when ``interior``.

    Scans the integer box around the projection of ``tP``, tests the facet
    inequalities there and keeps points whose lifted coordinates are
    integral. ``t = 0`` is allowed and gives the single point ``0``.
    """
    if t < 0:
        raise ValueError("dilation factor must be nonnegative")
    key = (t, interior)
    if key in p._cache:
        return p._cache[key]
    count = sum(len(chunk) for chunk in _points_chunks(p, t, interior))
    p._cache[key] = count
    return count


def lattice_points(p: Polytope, t: int = 1, interior: bool = False) -> list[tuple[int, ...]]:
    out = []
    for chunk in _points_chunks(p, t, interior):
        out.extend(tuple(int(c) for c in row) for row in chunk)
    return out


def _points_chunks(p: Polytope, t: int, interior: bool):
    r, coords = p.dim, p.coords
    ys = [p.project(v) for v in p.vertices]
    lo = [ceil(min(y[i] for y in ys) * t) for i in range(r)]
    hi = [floor(max(y[i] for y in ys) * t) for i in range(r)]

    rows, bounds = [], []
    for f in p.facets:
        b = f.offset * t
        rows.append(f.normal)
        # strict: largest integer below b
        bounds.append(ceil(b) - 1 if interior else floor(b))
    # lift: D * x = D * t * base + M (y - t * base_coords), M integer
    base = p._base
    D = lcm(1, *(c.denominator for row in p._span for c in row))
    M = [[int(D * p._span[k][j]) for k in range(r)] for j in range(p.ambient)]
    off = [D * t * base[j] - sum(D * p._span[k][j] * t * base[coords[k]] for k in range(r))
           for j in range(p.ambient)]
    off_int = all(o.denominator == 1 for o in off)

    extent = max([abs(x) for x in lo + hi] + [1])
    bound = max(
        [sum(abs(a) for a in row) * extent + abs(b) for row, b in zip(rows, bounds)]
        + [sum(abs(a) for a in row) * extent + abs(int(o)) + 1 for row, o in zip(M, off)]
        + [1]
    )
    dtype = choose_dtype(bound)
    A = np.array(rows, dtype=dtype).reshape(len(rows), r) if rows else None
    B = np.array(bounds, dtype=dtype) if rows else None
    Mm = np.array(M, dtype=dtype).reshape(p.ambient, r)
    for chunk in box_chunks(lo, hi, dtype):
        if A is not None:
            keep = np.all(chunk @ A.T <= B, axis=1)
            chunk = chunk[keep]
        if not len(chunk):
            continue
        if not off_int:
            continue  # affine hull of tP contains no lattice point at all
        full = chunk @ Mm.T + np.array([int(o) for o in off], dtype=dtype)
        ok = np.all(full % D == 0, axis=1) if D != 1 else np.ones(len(full), dtype=bool)
        if np.any(ok):
            yield full[ok] // D


# ---------------------------------------------------------------------------
# Ehrhart quasipolynomials


def ehrhart(p: Polytope, verify_horizon: int | None = None, interior: bool = False) -> Quasipolynomial:
    """Ehrhart quasipolynomial of ``p`` (of ``p``'s relative interior if asked).

    Period is the lcm of the vertex denominators. Constituent ``k`` is
    interpolated from ``t = k + period*m``, ``m = 1..dim+1``. The result is
    then checked against direct counts for ``1 <= t <= verify_horizon``
    (default ``2 (dim+1) period``).
    """
    per = p.denominator
    r = p.dim
    constituents = []
    for k in range(per):
        nodes = [k + per * m for m in range(1, r + 2)]
        constituents.append(poly_interpolate([(t, lattice_count(p, t, interior)) for t in nodes]))
    q = Quasipolynomial(constituents)
    horizon = 2 * (r + 1) * per if verify_horizon is None else verify_horizon
    for t in range(1, horizon + 1):
        if q(t) != lattice_count(p, t, interior):
            raise ArithmeticError(f"Ehrhart interpolation disagrees with the scan at t={t}")
    return q


def ehrhart_reciprocity_check(p: Polytope, horizon: int) -> bool:
    """``ehr(-t) == (-1)^dim * ehr_interior(t)`` for ``1 <= t <= horizon``."""
    q = ehrhart(p)
    sign = (-1) ** p.dim
    return all(q(-t) == sign * lattice_count(p, t, interior=True) for t in range(1, horizon + 1))


def reciprocity_witness(p: Polytope, horizon: int) -> int | None:
    """First ``t`` where reciprocity fails, else None."""
    q = ehrhart(p)
    sign = (-1) ** p.dim
    for t in range(1, horizon + 1):
        if q(-t) != sign * lattice_count(p, t, interior=True):
            return t
    return None


def normalized_volume(p: Polytope) -> Fraction:
    """``dim! * vol`` relative to the lattice of the affine hull, via the
    leading Ehrhart coefficient (lattice polytopes only)."""
    if not p.is_lattice():
        raise ValueError("normalized volume via Ehrhart needs a lattice polytope")
    q = ehrhart(p, verify_horizon=0).as_polynomial()
    return q.coeff(p.dim) * factorial(p.dim)


# ---------------------------------------------------------------------------
# faces


@dataclass
class Face:
    vertices: frozenset  # indices into polytope.vertices
    dim: int
    facets: frozenset  # indices of facets tight on the face


@dataclass
class FaceLattice:
    polytope: Polytope
    faces: list[Face]  # sorted by (dim, vertex tuple); faces[0] is the empty face

    def by_dim(self) -> dict[int, list[Face]]:
        out: dict[int, list[Face]] = {}
        for f in self.faces:
            out.setdefault(f.dim, []).append(f)
        return out

    def f_vector(self) -> list[int]:
        """Counts of nonempty faces by dimension 0..dim."""
        bd = self.by_dim()
        return [len(bd.get(k, [])) for k in range(self.polytope.dim + 1)]

    def f_polynomial(self) -> Polynomial:
        return Polynomial(self.f_vector())

    def poset(self) -> Poset:
        faces = self.faces
        return Poset.from_leq(faces, lambda a, b: a.vertices < b.vertices)

    def mobius_matches_closed_form(self) -> bool:
        """``mu(G, F) == (-1)^(dim F - dim G)`` for every pair ``G ⊆ F``."""
        return self.mobius_witness() is None

    def mobius_witness(self):
        poset = self.poset()
        mu = mobius(poset)
        for i, g in enumerate(self.faces):
            for j, f in enumerate(self.faces):
                if poset.leq(i + 1, j + 1) and mu(i + 1, j + 1) != (-1) ** (f.dim - g.dim):
                    return (g, f, mu(i + 1, j + 1))
        return None


MAX_FACE_LATTICE_DIM = 4


def face_lattice(p: Polytope) -> FaceLattice:
    """All faces, ∅ (dimension -1) and ``p`` included.

    Faces are the intersections of facet vertex sets, so each face is keyed
    by its vertex set and carries the set of facets tight on it.
    """
    if p.dim > MAX_FACE_LATTICE_DIM:
        raise ValueError(f"face lattice limited to dimension <= {MAX_FACE_LATTICE_DIM}")
    ys = [p.project(v) for v in p.vertices]
    facet_sets = [frozenset(i for i, y in enumerate(ys) if f.slack(y) == 0) for f in p.facets]
    everything = frozenset(range(len(ys)))
    sets = {everything}
    frontier = [everything]
    while frontier:
        nxt = []
        for s in frontier:
            for fs in facet_sets:
                u = s & fs
                if u not in sets:
                    sets.add(u)
                    nxt.append(u)
        frontier = nxt
    sets.add(frozenset())

    faces = []
    for s in sets:
        if not s:
            dim = -1
        else:
            vs = [ys[i] for i in sorted(s)]
            dim = rank([[a - b for a, b in zip(v, vs[0])] for v in vs[1:]]) if len(vs) > 1 else 0
        tight = frozenset(k for k, fs in enumerate(facet_sets) if s <= fs)
        faces.append(Face(s, dim, tight))
    faces.sort(key=lambda f: (f.dim, sorted(f.vertices)))
    return FaceLattice(p, faces)


def euler_characteristic(p: Polytope) -> int:
    """``f_P(-1)`` summed over the nonempty faces."""
    return sum((-1) ** k * n for k, n in enumerate(face_lattice(p).f_vector()))


# ---------------------------------------------------------------------------
# standard examples


def standard_simplex_points(d: int) -> list[tuple[int, ...]]:
    return [tuple(0 for _ in range(d))] + [tuple(int(i == j) for j in range(d)) for i in range(d)]


def cube_points(d: int) -> list[tuple[int, ...]]:
    return list(product((0, 1), repeat=d))


def simplex_volume(points: Sequence[Sequence]) -> Fraction:
    """``|det|`` of the edge vectors of a full-dimensional simplex."""
    base = points[0]
    return abs(det([[Fraction(a) - Fraction(b) for a, b in zip(v, base)] for v in points[1:]]))
