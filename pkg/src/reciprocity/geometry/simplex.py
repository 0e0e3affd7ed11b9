"""Lattice simplices, their cones, and the half-open fundamental parallelepipeds."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from ..algebra import Polynomial, RationalGF
from ..linalg import det, rref
from ._scan import box_chunks, choose_dtype
from .polytope import Polytope


class Simplex(Polytope):
    """A polytope whose vertices are affinely independent (``dim + 1`` of them)."""

    def __init__(self, points: Iterable[Sequence]):
        points = list(points)
        super().__init__(points)
        if len(self.vertices) != self.dim + 1 or len(set(map(tuple, points))) != self.dim + 1:
            raise ValueError("simplex vertices must be affinely independent")


@dataclass(frozen=True)
class HalfOpenParallelepiped:
    """``sum_i I_i * g_i`` with ``I_i = [0,1)`` (closed at 0) or ``(0,1]``.

    ``generators`` are the lifted vertices ``(v, 1)``.
    """

    generators: tuple[tuple[int, ...], ...]
    open_at_zero: tuple[bool, ...]

    @classmethod
    def of_simplex(cls, s: Simplex, open_at_zero: bool = False) -> "HalfOpenParallelepiped":
        if not s.is_lattice():
            raise ValueError("fundamental parallelepipeds are taken for lattice simplices")
        gens = tuple(tuple(int(c) for c in v) + (1,) for v in s.vertices)
        return cls(gens, (open_at_zero,) * len(gens))

    def lattice_points(self) -> list[tuple[int, ...]]:
        return [tuple(int(c) for c in row) for chunk in self._chunks() for row in chunk]

    def height_counts(self) -> Polynomial:
        """``sum_x z^height(x)`` over the lattice points (height = last coordinate)."""
        counts: dict[int, int] = {}
        for chunk in self._chunks():
            hs, cs = np.unique(chunk[:, -1].astype(np.int64), return_counts=True)
            for h, c in zip(hs, cs):
                counts[int(h)] = counts.get(int(h), 0) + int(c)
        top = max(counts, default=-1)
        return Polynomial([counts.get(k, 0) for k in range(top + 1)])

    def _chunks(self):
        G = [list(g) for g in self.generators]
        k = len(G)
        n = len(G[0])
        # pivot coordinates, height column first so it is always a pivot
        order = [n - 1] + list(range(n - 1))
        cols = [[G[i][c] for c in order] for i in range(k)]
        _, piv = rref(cols, n)
        P = [order[c] for c in piv]
        if len(P) != k:
            raise ValueError("parallelepiped generators are linearly dependent")
        Q = [c for c in range(n) if c not in P]
        GP = [[Fraction(G[i][c]) for c in P] for i in range(k)]  # x_P = lam @ GP
        D = det(GP)
        adj = _adjugate(GP)  # lam * D = x_P @ adj
        sgn = 1 if D > 0 else -1
        D_abs = abs(int(D))
        lo = [sum(min(0, G[i][c]) for i in range(k)) for c in P]
        hi = [sum(max(0, G[i][c]) for i in range(k)) for c in P]
        extent = max([abs(x) for x in lo + hi] + [1])
        adj_int = [[int(a) * sgn for a in row] for row in adj]
        bound = extent * k * k * max(abs(a) for row in adj_int for a in row) * (1 + max(abs(g) for row in G for g in row))
        dtype = choose_dtype(bound, D_abs * extent)
        A = np.array(adj_int, dtype=dtype).reshape(k, k)
        GQ = np.array([[G[i][c] for c in Q] for i in range(k)], dtype=dtype).reshape(k, len(Q))
        # generators are in self.generators order, matching lam's columns
        opened = np.array(self.open_at_zero, dtype=bool)
        for chunk in box_chunks(lo, hi, dtype):
            lamD = chunk @ A  # = lam * |D|
            ok = np.all(
                np.where(opened, (lamD > 0) & (lamD <= D_abs), (lamD >= 0) & (lamD < D_abs)),
                axis=1,
            )
            chunk, lamD = chunk[ok], lamD[ok]
            if not len(chunk):
                continue
            rest = lamD @ GQ
            integral = np.all(rest % D_abs == 0, axis=1) if Q else np.ones(len(chunk), dtype=bool)
            chunk, rest = chunk[integral], rest[integral]
            if not len(chunk):
                continue
            full = np.empty((len(chunk), n), dtype=dtype)
            full[:, P] = chunk
            if Q:
                full[:, Q] = rest // D_abs
            yield full


def _adjugate(m: list[list[Fraction]]) -> list[list[Fraction]]:
    """``adj(m)`` with ``m @ adj(m) = det(m) * I``."""
    n = len(m)
    if n == 1:
        return [[Fraction(1)]]
    adj = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1 :] for k, row in enumerate(m) if k != i]
            adj[j][i] = (-1) ** (i + j) * det(minor)
    return adj


def simplex_h_vectors(s: Simplex) -> tuple[Polynomial, Polynomial]:
    """``(h, h_tilde)``: height-graded lattice point counts of the parallelepipeds
    ``sum [0,1)(v,1)`` and ``sum (0,1](v,1)``."""
    if not s.is_lattice():
        raise ValueError("h-vectors are defined here for lattice simplices only")
    h = HalfOpenParallelepiped.of_simplex(s).height_counts()
    ht = HalfOpenParallelepiped.of_simplex(s, open_at_zero=True).height_counts()
    return h, ht


def simplex_ehrhart_series(s: Simplex, interior: bool = False) -> RationalGF:
    """``h(z) / (1-z)^(dim+1)``; with ``interior`` the series of the open simplex."""
    h, ht = simplex_h_vectors(s)
    return RationalGF(ht if interior else h, [1] * (s.dim + 1))


def normalized_volume_simplex(s: Simplex) -> int:
    """Index of the lattice spanned by the lifted vertices inside the lattice of
    the cone's linear span: the number of lattice points of ``[0,1)``
    parallelepiped, i.e. ``h(1)``."""
    h, _ = simplex_h_vectors(s)
    return int(h(1))
