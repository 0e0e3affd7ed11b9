"""Finite posets on ``1..n``: Möbius functions, linear extensions, descents.

Elements are the integers ``1..n``. The order is stored as its reflexive
transitive closure; ``leq(j, k)`` answers ``a_j <= a_k``.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, permutations
from typing import Callable, Iterable, Mapping, Sequence


class PosetError(ValueError):
    """The given relation is not a partial order."""


class NotNaturallyLabeled(ValueError):
    pass


class Poset:
    """Finite partial order on ``{1, ..., n}``.

    Construct from any generating set of strict relations ``(j, k)`` meaning
    ``a_j < a_k``; the transitive closure is taken here. Cycles are rejected
    with :class:`PosetError` (antisymmetry).
    """

    def __init__(self, n: int, relations: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise PosetError("poset size must be nonnegative")
        self.n = n
        up = [set() for _ in range(n + 1)]
        for j, k in relations:
            if not (1 <= j <= n and 1 <= k <= n):
                raise PosetError(f"relation {j} < {k} mentions an element outside 1..{n}")
            if j == k:
                continue
            up[j].add(k)
        # closure: DFS from each element
        above = [frozenset()] * (n + 1)
        for j in range(1, n + 1):
            seen = set()
            stack = list(up[j])
            while stack:
                k = stack.pop()
                if k in seen:
                    continue
                seen.add(k)
                stack.extend(up[k])
            if j in seen:
                raise PosetError(f"antisymmetry violated: {j} lies strictly above itself")
            above[j] = frozenset(seen)
        self._above = above  # strict upper sets
        self._below = [frozenset(j for j in range(1, n + 1) if k in above[j]) for k in range(n + 1)]

    # queries

    @property
    def elements(self) -> range:
        return range(1, self.n + 1)

    def leq(self, j: int, k: int) -> bool:
        return j == k or k in self._above[j]

    def lt(self, j: int, k: int) -> bool:
        return k in self._above[j]

    def strictly_above(self, j: int) -> frozenset:
        return self._above[j]

    def strictly_below(self, k: int) -> frozenset:
        return self._below[k]

    def interval(self, x: int, y: int) -> list[int]:
        """Elements ``z`` with ``x <= z <= y``."""
        if not self.leq(x, y):
            return []
        return [z for z in self.elements if self.leq(x, z) and self.leq(z, y)]

    @cached_property
    def relations(self) -> list[tuple[int, int]]:
        """All strict relations ``(j, k)`` with ``a_j < a_k``, sorted."""
        return sorted((j, k) for j in self.elements for k in self._above[j])

    @cached_property
    def covers(self) -> list[tuple[int, int]]:
        out = []
        for j, k in self.relations:
            if not any(self.lt(j, m) and self.lt(m, k) for m in self.elements):
                out.append((j, k))
        return out

    @cached_property
    def is_natural(self) -> bool:
        """True iff ``a_j <= a_k`` forces ``j <= k``."""
        return all(j < k for j, k in self.relations)

    def require_natural(self) -> None:
        if not self.is_natural:
            raise NotNaturallyLabeled(
                "poset is not naturally labeled; relabel it first with Poset.natural_relabeling()"
            )

    def natural_relabeling(self) -> tuple["Poset", list[int]]:
        """Relabel along a topological order (ties broken by smaller label).

        Returns ``(q, perm)`` where ``perm[new - 1]`` is the old label of
        element ``new`` in ``q``.
        """
        indeg = {k: len(self._below[k]) for k in self.elements}
        heap = [k for k in self.elements if indeg[k] == 0]
        heapq.heapify(heap)
        order = []
        placed = set()
        while heap:
            k = heapq.heappop(heap)
            order.append(k)
            placed.add(k)
            for m in self.elements:
                if m not in placed and m not in heap and self._below[m] <= placed:
                    heapq.heappush(heap, m)
        new_of = {old: i + 1 for i, old in enumerate(order)}
        rel = [(new_of[j], new_of[k]) for j, k in self.covers]
        return Poset(self.n, rel), order

    def dual(self) -> "Poset":
        return Poset(self.n, [(k, j) for j, k in self.covers])

    def __eq__(self, other):
        return isinstance(other, Poset) and self.n == other.n and self.relations == other.relations

    def __hash__(self):
        return hash((self.n, tuple(self.relations)))

    def __repr__(self):
        return f"Poset({self.n}, {self.covers})"

    # standard families

    @classmethod
    def chain(cls, d: int) -> "Poset":
        return cls(d, [(j, j + 1) for j in range(1, d)])

    @classmethod
    def antichain(cls, d: int) -> "Poset":
        return cls(d)

    @classmethod
    def boolean_lattice(cls, r: int) -> tuple["Poset", list[frozenset]]:
        """Subsets of ``{1..r}`` ordered by inclusion, labeled by (size, lex)."""
        subsets = [frozenset(c) for k in range(r + 1) for c in combinations(range(1, r + 1), k)]
        idx = {s: i + 1 for i, s in enumerate(subsets)}
        rel = [(idx[s], idx[s | {x}]) for s in subsets for x in range(1, r + 1) if x not in s]
        return cls(len(subsets), rel), subsets

    @classmethod
    def from_leq(cls, items: Sequence, leq: Callable[[object, object], bool]) -> "Poset":
        """Poset on ``items`` (labeled 1.. in the given order) under ``leq``."""
        n = len(items)
        rel = [
            (i + 1, j + 1)
            for i in range(n)
            for j in range(n)
            if i != j and leq(items[i], items[j])
        ]
        return cls(n, rel)


# ---------------------------------------------------------------------------
# Möbius function


class MobiusTable(Mapping):
    """``mu(x, y)`` for comparable pairs; incomparable pairs read as 0."""

    def __init__(self, poset: Poset, values: dict[tuple[int, int], int]):
        self.poset = poset
        self._values = values

    def __getitem__(self, key):
        return self._values.get(key, 0)

    def __iter__(self):
        return iter(self._values)

    def __len__(self):
        return len(self._values)

    def __call__(self, x: int, y: int) -> int:
        return self[(x, y)]


def mobius(p: Poset) -> MobiusTable:
    """Möbius function by the defining recursion, memoized from each ``x``.

    mu(x, x) = 1 and mu(x, y) = -sum_{x <= z < y} mu(x, z).
    """
    values: dict[tuple[int, int], int] = {}
    for x in p.elements:
        up = [x] + sorted(p.strictly_above(x), key=lambda z: len(p.strictly_below(z)))
        # len(strictly_below) is a linear extension of the order, so every
        # z < y inside [x, y] is handled before y
        for y in up:
            if y == x:
                values[(x, x)] = 1
                continue
            values[(x, y)] = -sum(
                values[(x, z)] for z in p.strictly_below(y) if p.leq(x, z)
            )
    return MobiusTable(p, values)


def mobius_inversion_check(p: Poset, f: Callable[[int], Fraction] | Mapping[int, Fraction]) -> bool:
    """Invert ``f(x) = sum_{y >= x} g(y)`` with mu, re-sum, compare with ``f``."""
    fv = {x: Fraction(f(x) if callable(f) else f[x]) for x in p.elements}
    mu = mobius(p)
    g = {x: sum((mu(x, y) * fv[y] for y in p.elements if p.leq(x, y)), Fraction(0))
         for x in p.elements}
    return all(
        sum((g[y] for y in p.elements if p.leq(x, y)), Fraction(0)) == fv[x]
        for x in p.elements
    )


# ---------------------------------------------------------------------------
# linear extensions and permutation statistics


def _check_permutation(s: Sequence[int]) -> tuple[int, ...]:
    s = tuple(s)
    if sorted(s) != list(range(1, len(s) + 1)):
        raise ValueError(f"{list(s)} is not a permutation of 1..{len(s)}")
    return s


def linear_extensions(p: Poset) -> list[tuple[int, ...]]:
    """All ``sigma`` (one-line notation) with ``a_j <= a_k => sigma^-1(j) < sigma^-1(k)``.

    ``sigma`` lists the chain ``a_sigma(1) < ... < a_sigma(d)``. Output is
    lexicographic; enumeration backtracks over currently minimal elements.
    """
    p.require_natural()
    out: list[tuple[int, ...]] = []
    placed: list[int] = []
    used = [False] * (p.n + 1)

    def rec():
        if len(placed) == p.n:
            out.append(tuple(placed))
            return
        for k in p.elements:
            if not used[k] and all(used[j] for j in p.strictly_below(k)):
                used[k] = True
                placed.append(k)
                rec()
                placed.pop()
                used[k] = False

    rec()
    return out


def linear_extensions_brute(p: Poset) -> list[tuple[int, ...]]:
    """Filter all of S_d; the oracle for :func:`linear_extensions`."""
    out = []
    for s in permutations(p.elements):
        pos = {v: i for i, v in enumerate(s)}
        if all(pos[j] < pos[k] for j, k in p.relations):
            out.append(tuple(s))
    return out


@dataclass(frozen=True)
class DescentStats:
    des: frozenset
    maj: int
    asc: frozenset
    amaj: int


def descent_stats(s: Sequence[int]) -> DescentStats:
    s = _check_permutation(s)
    des = frozenset(j for j in range(1, len(s)) if s[j - 1] > s[j])
    asc = frozenset(j for j in range(1, len(s)) if s[j - 1] < s[j])
    return DescentStats(des, sum(des), asc, sum(asc))
