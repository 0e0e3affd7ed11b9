"""P-partitions of naturally labeled posets.

A (weak) P-partition of ``t`` is a map ``x: P -> Z_{>=0}`` with
``sum x = t`` and ``x_j >= x_k`` whenever ``a_j <= a_k``; strict ones
require ``x_j > x_k`` whenever ``a_j < a_k``. Points are tuples indexed by
label, so ``x[k - 1]`` is the value on ``a_k``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Sequence

from .algebra import Polynomial, RationalGF, gf_equal, gf_reciprocal, gf_series_prefix, neg_z_power
from .poset import DescentStats, Poset, descent_stats, linear_extensions


@dataclass(frozen=True)
class PPartitionSpec:
    """A naturally labeled poset plus the weak/strict switch.

    ``relabeling[new - 1]`` is the label the element had in the poset passed
    to :meth:`of`; it is the identity when no relabeling was needed.
    """

    poset: Poset
    strict: bool = False
    relabeling: tuple[int, ...] = ()

    def __post_init__(self):
        self.poset.require_natural()
        if not self.relabeling:
            object.__setattr__(self, "relabeling", tuple(self.poset.elements))

    @classmethod
    def of(cls, p: Poset, strict: bool = False) -> "PPartitionSpec":
        """Wrap ``p``, relabeling it along a topological order if needed."""
        if p.is_natural:
            return cls(p, strict)
        q, order = p.natural_relabeling()
        return cls(q, strict, tuple(order))

    @property
    def d(self) -> int:
        return self.poset.n

    def to_original(self, x: Sequence[int]) -> tuple[int, ...]:
        """Re-index a point (indexed by current labels) by the original labels."""
        out = [0] * self.d
        for new, old in enumerate(self.relabeling, start=1):
            out[old - 1] = x[new - 1]
        return tuple(out)

    def permutation_to_original(self, sigma: Sequence[int]) -> tuple[int, ...]:
        return tuple(self.relabeling[k - 1] for k in sigma)

    def contains(self, x: Sequence[int]) -> bool:
        if len(x) != self.d or any(v < 0 for v in x):
            return False
        for j, k in self.poset.relations:
            if x[j - 1] < x[k - 1] or (self.strict and x[j - 1] == x[k - 1]):
                return False
        return True


def _points(spec: PPartitionSpec, t_max: int):
    """Every P-partition with coordinate sum <= t_max.

    Values are assigned in label order (a linear extension, by naturality),
    so each ``x_k`` is capped by the values already placed below it and by
    the budget left.
    """
    d = spec.d
    below = [sorted(spec.poset.strictly_below(k)) for k in range(1, d + 1)]
    drop = 1 if spec.strict else 0
    x = [0] * d

    def rec(k: int, budget: int):
        if k == d:
            yield tuple(x)
            return
        cap = budget
        for j in below[k]:
            cap = min(cap, x[j - 1] - drop)
        for v in range(cap + 1):
            x[k] = v
            yield from rec(k + 1, budget - v)
        x[k] = 0

    yield from rec(0, t_max)


def ppartition_counts(spec: PPartitionSpec, t_max: int) -> list[int]:
    """``[#P-partitions of t for t = 0..t_max]`` by enumeration."""
    if t_max < 0:
        raise ValueError("t must be nonnegative")
    counts = [0] * (t_max + 1)
    for x in _points(spec, t_max):
        counts[sum(x)] += 1
    return counts


def ppartition_count(spec: PPartitionSpec, t: int) -> int:
    if t < 0:
        raise ValueError("t must be nonnegative")
    return ppartition_counts(spec, t)[t]


def _denominator(d: int) -> list[int]:
    return list(range(1, d + 1))


@dataclass(frozen=True)
class ExtensionRow:
    sigma: tuple[int, ...]
    stats: DescentStats


def extension_table(p: Poset) -> list[ExtensionRow]:
    return [ExtensionRow(s, descent_stats(s)) for s in linear_extensions(p)]


def ppartition_gf(spec: PPartitionSpec) -> RationalGF:
    """``sum_sigma z^maj / prod (1 - z^k)``, or ``z^amaj`` when strict.

    Left unreduced, so the numerator is the extension sum itself.
    """
    num = Polynomial()
    for row in extension_table(spec.poset):
        e = row.stats.amaj if spec.strict else row.stats.maj
        num = num + Polynomial.monomial(e)
    return RationalGF(num, _denominator(spec.d), reduce=False)


@dataclass(frozen=True)
class HalfOpenChainCell:
    """``x_sigma(1) >= ... >= x_sigma(d) >= 0``, strict at ``j`` in Des sigma.

    With ``strict`` the roles flip: strict at the ascents. These are the
    cells that tile the strict P-partitions.
    """

    sigma: tuple[int, ...]
    strict: bool = False

    @property
    def stats(self) -> DescentStats:
        return descent_stats(self.sigma)

    @property
    def strict_positions(self) -> frozenset:
        return self.stats.asc if self.strict else self.stats.des

    def contains(self, x: Sequence[int]) -> bool:
        vals = [x[k - 1] for k in self.sigma]
        if vals and vals[-1] < 0:
            return False
        sp = self.strict_positions
        for j in range(1, len(vals)):
            a, b = vals[j - 1], vals[j]
            if a < b or (j in sp and a == b):
                return False
        return True

    def points(self, t_max: int):
        """Lattice points of the cell with coordinate sum <= t_max."""
        d = len(self.sigma)
        sp = self.strict_positions
        vals = [0] * d

        def rec(j: int, budget: int):
            if j == d:
                x = [0] * d
                for k, v in zip(self.sigma, vals):
                    x[k - 1] = v
                yield tuple(x)
                return
            # positions run from the top down: vals[j] <= vals[j-1] (minus 1 at a strict spot)
            cap = budget if j == 0 else min(budget, vals[j - 1] - (1 if j in sp else 0))
            for v in range(cap + 1):
                vals[j] = v
                yield from rec(j + 1, budget - v)

        yield from rec(0, t_max)


def cell_gf(cell: HalfOpenChainCell) -> RationalGF:
    """``z^maj sigma / prod_{k<=d} (1 - z^k)`` (``z^amaj`` for a strict cell)."""
    s = cell.stats
    e = s.amaj if cell.strict else s.maj
    return RationalGF(Polynomial.monomial(e), _denominator(len(cell.sigma)), reduce=False)


def cells(spec: PPartitionSpec) -> list[HalfOpenChainCell]:
    return [HalfOpenChainCell(s, spec.strict) for s in linear_extensions(spec.poset)]


def cell_decomposition_witness(spec: PPartitionSpec, t_max: int):
    """First ``(x, multiplicity, in_K)`` breaking the tiling, else None.

    Every point of ``Z_{>=0}^d`` with coordinate sum <= t_max must lie in
    exactly one cell if it is a P-partition and in none otherwise.
    """
    cs = cells(spec)
    for total in range(t_max + 1):
        for x in _compositions(spec.d, total):
            mult = sum(1 for c in cs if c.contains(x))
            in_k = spec.contains(x)
            if mult != (1 if in_k else 0):
                return (x, mult, in_k)
    return None


def cell_decomposition_check(spec: PPartitionSpec, t_max: int) -> bool:
    return cell_decomposition_witness(spec, t_max) is None


def _compositions(d: int, total: int):
    """Weak compositions of ``total`` into ``d`` parts, lexicographically."""
    if d == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(d - 1, total - first):
            yield (first,) + rest


def series_check(spec: PPartitionSpec, n: int = 12) -> bool:
    """Series prefix of the gf against the enumeration, ``t = 0..n``."""
    return gf_series_prefix(ppartition_gf(spec), n) == ppartition_counts(spec, n)


def stanley_reciprocity_witness(p: Poset):
    """None if ``P(1/z) = (-z)^d P°(z)`` holds by both routes, else a reason.

    Route one compares rational functions via :func:`gf_reciprocal`; route
    two uses ``maj + amaj = binom(d, 2)`` on every linear extension, which
    makes the strict numerator ``z^binom(d,2)`` times the reversed weak one.
    """
    p.require_natural()
    d = p.n
    weak = ppartition_gf(PPartitionSpec(p, False))
    strict = ppartition_gf(PPartitionSpec(p, True))
    lhs = gf_reciprocal(weak)
    rhs = RationalGF(neg_z_power(d) * strict.numerator, strict.den, reduce=False)
    if not gf_equal(lhs, rhs):
        return ("rational functions differ", str(lhs), str(rhs))
    top = comb(d, 2)
    for row in extension_table(p):
        if row.stats.maj + row.stats.amaj != top:
            return ("maj + amaj", row.sigma, row.stats.maj, row.stats.amaj)
    if strict.numerator != weak.numerator.reversed(top):
        return ("strict numerator is not the reversed weak numerator", str(strict.numerator), str(weak.numerator))
    return None


def stanley_reciprocity_check(p: Poset) -> bool:
    return stanley_reciprocity_witness(p) is None


def random_natural_poset(rng, d: int, density: float = 0.35) -> Poset:
    """Random naturally labeled poset: each pair ``j < k`` related with the
    given probability, then closed transitively."""
    rel = [(j, k) for j in range(1, d + 1) for k in range(j + 1, d + 1) if rng.random() < density]
    return Poset(d, rel)


def lambda_poset() -> Poset:
    """``a_1, a_2 < a_3``."""
    return Poset(3, [(1, 3), (2, 3)])


__all__ = [
    "PPartitionSpec",
    "ppartition_count",
    "ppartition_counts",
    "ppartition_gf",
    "ExtensionRow",
    "extension_table",
    "HalfOpenChainCell",
    "cell_gf",
    "cells",
    "cell_decomposition_check",
    "cell_decomposition_witness",
    "series_check",
    "stanley_reciprocity_check",
    "stanley_reciprocity_witness",
    "random_natural_poset",
    "lambda_poset",
]
