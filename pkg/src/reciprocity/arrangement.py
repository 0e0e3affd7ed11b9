"""Rational affine hyperplane arrangements.

A flat is stored as the reduced row-echelon form of its defining system
``(A | b)``, so two flats are the same set iff their keys are equal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .algebra import Polynomial
from .linalg import rank, rref, solve_affine
from .poset import Poset, mobius


@dataclass(frozen=True)
class Hyperplane:
    """``{x : normal . x = offset}``, scaled so the first nonzero normal entry is 1."""

    normal: tuple[Fraction, ...]
    offset: Fraction

    def __post_init__(self):
        normal = tuple(Fraction(c) for c in self.normal)
        lead = next((c for c in normal if c != 0), None)
        if lead is None:
            raise ValueError("hyperplane normal must be nonzero")
        object.__setattr__(self, "normal", tuple(c / lead for c in normal))
        object.__setattr__(self, "offset", Fraction(self.offset) / lead)

    @property
    def dim(self) -> int:
        return len(self.normal)

    def value(self, x: Sequence) -> Fraction:
        return sum((c * xi for c, xi in zip(self.normal, x)), Fraction(0)) - self.offset


class Arrangement:
    def __init__(self, dim: int, hyperplanes: Iterable[Hyperplane] = ()):
        seen = []
        for h in hyperplanes:
            if h.dim != dim:
                raise ValueError(f"hyperplane lives in R^{h.dim}, arrangement in R^{dim}")
            if h not in seen:
                seen.append(h)
        self.dim = dim
        self.hyperplanes: tuple[Hyperplane, ...] = tuple(seen)

    def __len__(self):
        return len(self.hyperplanes)

    def __repr__(self):
        return f"Arrangement(dim={self.dim}, {len(self)} hyperplanes)"

    def __eq__(self, other):
        return (
            isinstance(other, Arrangement)
            and self.dim == other.dim
            and set(self.hyperplanes) == set(other.hyperplanes)
        )

    def without(self, h: Hyperplane) -> "Arrangement":
        return Arrangement(self.dim, (g for g in self.hyperplanes if g != h))

    def sign_vector(self, x: Sequence) -> tuple[int, ...]:
        out = []
        for h in self.hyperplanes:
            v = h.value(x)
            out.append((v > 0) - (v < 0))
        return tuple(out)

    @classmethod
    def from_rows(cls, dim: int, rows: Iterable[Sequence]) -> "Arrangement":
        """Rows ``c_1 .. c_d b`` meaning ``c . x = b``."""
        return cls(dim, (Hyperplane(tuple(r[:dim]), r[dim]) for r in rows))


# ---------------------------------------------------------------------------
# standard families


def boolean_arrangement(d: int) -> Arrangement:
    return Arrangement(d, (Hyperplane(tuple(int(i == j) for j in range(d)), 0) for i in range(d)))


def braid_arrangement(d: int) -> Arrangement:
    hs = []
    for i, j in combinations(range(d), 2):
        v = [0] * d
        v[i], v[j] = 1, -1
        hs.append(Hyperplane(tuple(v), 0))
    return Arrangement(d, hs)


def graphical_arrangement(n: int, edges: Iterable[tuple[int, int]]) -> Arrangement:
    """``{x_i = x_j : ij in E}`` in R^n (nodes 1..n)."""
    hs = []
    for i, j in edges:
        v = [0] * n
        v[i - 1], v[j - 1] = 1, -1
        hs.append(Hyperplane(tuple(v), 0))
    return Arrangement(n, hs)


def is_general_position(a: Arrangement) -> bool:
    """Any ``k <= d`` normals independent, and no ``d + 1`` hyperplanes meet."""
    d = a.dim
    hs = a.hyperplanes
    for k in range(1, min(d, len(hs)) + 1):
        for sub in combinations(hs, k):
            if rank([h.normal for h in sub]) < k:
                return False
    for sub in combinations(hs, d + 1):
        if solve_affine([h.normal for h in sub], [h.offset for h in sub]) is not None:
            return False
    return True


def generic_arrangement(n: int, d: int, rng: random.Random, coeff_range: int = 5,
                        max_tries: int = 1000) -> Arrangement:
    """``n`` hyperplanes in general position with small random integer data.

    Rejection sampling: redraw the whole arrangement until it passes
    :func:`is_general_position`.
    """
    for _ in range(max_tries):
        hs = []
        for _ in range(n):
            normal = [rng.randint(-coeff_range, coeff_range) for _ in range(d)]
            if not any(normal):
                break
            hs.append(Hyperplane(tuple(normal), rng.randint(-coeff_range, coeff_range)))
        if len(hs) != n:
            continue
        a = Arrangement(d, hs)
        if len(a) == n and is_general_position(a):
            return a
    raise RuntimeError("could not draw a generic arrangement")


def random_arrangement(rng: random.Random, max_dim: int = 4, max_hyperplanes: int = 6,
                       coeff_range: int = 2) -> Arrangement:
    """Arbitrary (usually non-generic) small rational arrangement."""
    d = rng.randint(1, max_dim)
    hs = []
    for _ in range(rng.randint(0, max_hyperplanes)):
        normal = [rng.randint(-coeff_range, coeff_range) for _ in range(d)]
        if not any(normal):
            normal[rng.randrange(d)] = 1
        hs.append(Hyperplane(tuple(normal), rng.randint(-coeff_range, coeff_range)))
    return Arrangement(d, hs)


# ---------------------------------------------------------------------------
# flats


@dataclass(frozen=True)
class Flat:
    """Solution set of the canonical system ``rows`` (each row ``(a_1..a_d, b)``)."""

    ambient: int
    rows: tuple[tuple[Fraction, ...], ...] = ()

    @classmethod
    def from_system(cls, ambient: int, rows) -> "Flat | None":
        """Canonical flat for ``rows``, or None when the system is inconsistent."""
        red, piv = rref(list(rows), ambient + 1) if rows else ([], [])
        if ambient in piv:
            return None
        return cls(ambient, tuple(tuple(r) for r in red))

    @property
    def dim(self) -> int:
        return self.ambient - len(self.rows)

    def contains(self, other: "Flat") -> bool:
        """Set inclusion ``other ⊆ self``."""
        if not self.rows:
            return True
        if other.dim > self.dim:
            return False
        # every equation of self must hold on other = {p + N y}
        p, N = other.parametrization
        for row in self.rows:
            a, b = row[:-1], row[-1]
            nz = [(i, c) for i, c in enumerate(a) if c]
            if sum((c * p[i] for i, c in nz), Fraction(0)) != b:
                return False
            if any(sum((c * N[i][j] for i, c in nz), Fraction(0)) for j in range(other.dim)):
                return False
        return True

    def intersect(self, h: Hyperplane) -> "Flat | None":
        return Flat.from_system(self.ambient, list(self.rows) + [list(h.normal) + [h.offset]])

    @cached_property
    def parametrization(self) -> tuple[list[Fraction], list[list[Fraction]]]:
        """``(p, N)`` with the flat equal to ``{p + N y : y in R^dim}``."""
        if not self.rows:
            eye = [[Fraction(int(i == j)) for j in range(self.ambient)] for i in range(self.ambient)]
            return [Fraction(0)] * self.ambient, eye
        A = [list(r[:-1]) for r in self.rows]
        b = [r[-1] for r in self.rows]
        sol = solve_affine(A, b)
        assert sol is not None
        p, basis = sol
        # N as an ambient x dim matrix whose columns are the basis vectors
        N = [[v[i] for v in basis] for i in range(self.ambient)]
        return p, N


def ambient_flat(d: int) -> Flat:
    return Flat(d, ())


@dataclass
class FlatPoset:
    """Flats ordered by reverse inclusion, with ``mu(F) = mu(R^d, F)``."""

    flats: list[Flat]
    poset: Poset
    mu: dict[Flat, int] = field(default_factory=dict)

    def __len__(self):
        return len(self.flats)

    def index(self, f: Flat) -> int:
        return self.flats.index(f) + 1


def flats(a: Arrangement) -> FlatPoset:
    """Every nonempty intersection of hyperplanes, R^d included.

    Built as the closure of ``{R^d}`` under intersection with single
    hyperplanes, which reaches exactly the subset intersections.
    """
    top = ambient_flat(a.dim)
    found = {top}
    frontier = [top]
    while frontier:
        nxt = []
        for f in frontier:
            for h in a.hyperplanes:
                g = f.intersect(h)
                if g is not None and g not in found:
                    found.add(g)
                    nxt.append(g)
        frontier = nxt
    ordered = sorted(found, key=lambda f: (-f.dim, f.rows))
    # F <= G iff F ⊇ G; sorting by decreasing dimension keeps labels natural
    poset = Poset.from_leq(ordered, lambda F, G: F.dim > G.dim and F.contains(G))
    mu_table = mobius(poset)
    mu = {f: mu_table(1, i + 1) for i, f in enumerate(ordered)}
    return FlatPoset(ordered, poset, mu)


def flats_by_subsets(a: Arrangement) -> set[Flat]:
    """Oracle: intersect every subset of hyperplanes directly."""
    out = set()
    hs = a.hyperplanes
    for k in range(len(hs) + 1):
        for sub in combinations(hs, k):
            f = Flat.from_system(a.dim, [list(h.normal) + [h.offset] for h in sub])
            if f is not None:
                out.add(f)
    return out


def characteristic_polynomial(a: Arrangement) -> Polynomial:
    """``sum_F mu(F) t^dim(F)`` over the flats."""
    fp = flats(a)
    p = Polynomial()
    for f in fp.flats:
        p = p + Polynomial.monomial(f.dim, fp.mu[f])
    return p


def regions_zaslavsky(a: Arrangement) -> int:
    """``(-1)^d h(-1)``."""
    value = (-1) ** a.dim * characteristic_polynomial(a)(-1)
    if value.denominator != 1 or value < 1:
        raise ArithmeticError(f"Zaslavsky count {value} is not a positive integer")
    return int(value)


def induced_arrangement(a: Arrangement, f: Flat) -> Arrangement:
    """The arrangement ``a`` induces on ``f``, in coordinates ``y`` of ``f = p + N y``.

    Hyperplanes that contain ``f`` or miss it are dropped.
    """
    p, N = f.parametrization
    k = f.dim
    hs = []
    for h in a.hyperplanes:
        normal = [sum((h.normal[i] * N[i][j] for i in range(a.dim)), Fraction(0)) for j in range(k)]
        rhs = h.offset - sum((c * x for c, x in zip(h.normal, p)), Fraction(0))
        if any(normal):
            hs.append(Hyperplane(tuple(normal), rhs))
    return Arrangement(k, hs)


def regions_deletion_restriction(a: Arrangement) -> int:
    """``r(A) = r(A - H) + r(A^H)``, ``r(empty) = 1``; no Möbius function involved."""
    cache: dict[tuple, int] = {}

    def r(arr: Arrangement) -> int:
        if not arr.hyperplanes:
            return 1
        key = (arr.dim, frozenset(arr.hyperplanes))
        if key in cache:
            return cache[key]
        h = arr.hyperplanes[-1]
        hflat = Flat.from_system(arr.dim, [list(h.normal) + [h.offset]])
        val = r(arr.without(h)) + r(induced_arrangement(arr, hflat))
        cache[key] = val
        return val

    return r(a)


# closed forms used as oracles


def falling_factorial_poly(d: int) -> Polynomial:
    return Polynomial.from_roots(range(d))


def generic_characteristic_polynomial(n: int, d: int) -> Polynomial:
    """``sum_{k <= d} (-1)^k binom(n, k) t^(d-k)`` for ``n`` generic hyperplanes in R^d."""
    p = Polynomial()
    for k in range(min(n, d) + 1):
        p = p + Polynomial.monomial(d - k, (-1) ** k * comb(n, k))
    return p
