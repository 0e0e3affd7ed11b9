"""Chromatic polynomials, acyclic orientations, and inside-out polytope counts.

Nodes are ``1..n``. Geometric counts use the dilation convention: ``I`` and
``O`` at ``t`` count points of ``Z^n`` in ``tP`` (equivalently points of
``(1/t) Z^n`` in ``P``), and ``t = 0`` is allowed for ``O``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

from .algebra import Polynomial, poly_interpolate
from .arrangement import Arrangement, Hyperplane, ambient_flat, graphical_arrangement
from .geometry.polytope import Polytope, _points_chunks, cube_points


class Graph:
    """Simple graph on ``1..n``; parallel edges collapse, loops are remembered."""

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        es = set()
        loops = set()
        for i, j in edges:
            if not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"edge {i} {j} mentions a node outside 1..{n}")
            if i == j:
                loops.add(i)
            else:
                es.add((min(i, j), max(i, j)))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(es))
        self.loops: frozenset = frozenset(loops)

    @property
    def has_loop(self) -> bool:
        return bool(self.loops)

    def __repr__(self):
        return f"Graph({self.n}, {list(self.edges)})"

    def __eq__(self, other):
        return isinstance(other, Graph) and (self.n, self.edges, self.loops) == (other.n, other.edges, other.loops)

    def __hash__(self):
        return hash((self.n, self.edges, self.loops))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, combinations(range(1, n + 1), 2))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls(n, [(i, i % n + 1) for i in range(1, n + 1)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(1, n)])

    @classmethod
    def random(cls, rng: random.Random, max_nodes: int = 5) -> "Graph":
        n = rng.randint(1, max_nodes)
        keep = rng.randint(1, 3)  # edge density keep/4
        es = [e for e in combinations(range(1, n + 1), 2) if rng.randint(0, 3) < keep]
        return cls(n, es)

    def arrangement(self) -> Arrangement:
        return graphical_arrangement(self.n, self.edges)


# ---------------------------------------------------------------------------
# chromatic polynomial


def chromatic_polynomial(g: Graph) -> Polynomial:
    """Deletion-contraction ``c(G) = c(G - e) - c(G / e)``, memoized on edge sets."""
    if g.has_loop:
        return Polynomial()
    return _chromatic(g.n, g.edges)


@lru_cache(maxsize=None)
def _chromatic(n: int, edges: tuple[tuple[int, int], ...]) -> Polynomial:
    if not edges:
        return Polynomial.monomial(n)
    (u, v), rest = edges[0], edges[1:]
    deleted = _chromatic(n, rest)
    # contract v into u, relabel to 1..n-1
    merged = set()
    for a, b in rest:
        a = u if a == v else a
        b = u if b == v else b
        a = a - 1 if a > v else a
        b = b - 1 if b > v else b
        merged.add((min(a, b), max(a, b)))
    contracted = _chromatic(n - 1, tuple(sorted(merged)))
    return deleted - contracted


def proper_colorings_brute(g: Graph, t: int) -> int:
    """Count ``x in [t]^V`` with ``x_i != x_j`` on every edge."""
    if g.has_loop:
        return 0
    return sum(
        1 for x in product(range(1, t + 1), repeat=g.n) if all(x[i - 1] != x[j - 1] for i, j in g.edges)
    )


# ---------------------------------------------------------------------------
# orientations


@dataclass(frozen=True)
class Orientation:
    """``arcs[k] = (tail, head)`` for the k-th edge of the graph."""

    arcs: tuple[tuple[int, int], ...]

    def is_acyclic(self, n: int) -> bool:
        out = {v: [] for v in range(1, n + 1)}
        indeg = {v: 0 for v in range(1, n + 1)}
        for a, b in self.arcs:
            out[a].append(b)
            indeg[b] += 1
        queue = [v for v in out if indeg[v] == 0]
        seen = 0
        while queue:
            v = queue.pop()
            seen += 1
            for w in out[v]:
                indeg[w] -= 1
                if indeg[w] == 0:
                    queue.append(w)
        return seen == n

    def compatible(self, x: Sequence[int]) -> bool:
        """``x_head >= x_tail`` along every arc."""
        return all(x[b - 1] >= x[a - 1] for a, b in self.arcs)

    def to_dot(self, name: str = "G") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f"  {a} -> {b};" for a, b in self.arcs]
        lines.append("}")
        return "\n".join(lines)


def all_orientations(g: Graph) -> list[Orientation]:
    return [
        Orientation(tuple((i, j) if flip == 0 else (j, i) for (i, j), flip in zip(g.edges, flips)))
        for flips in product((0, 1), repeat=len(g.edges))
    ]


def acyclic_orientations(g: Graph) -> list[Orientation]:
    """All acyclic orientations; a graph with a loop has none."""
    if g.has_loop:
        return []
    return [o for o in all_orientations(g) if o.is_acyclic(g.n)]


def compatible_pairs(g: Graph, t: int) -> int:
    """``#{(x, o) : x in [t]^V, o acyclic, x compatible with o}``."""
    aos = acyclic_orientations(g)
    return sum(
        sum(1 for o in aos if o.compatible(x)) for x in product(range(1, t + 1), repeat=g.n)
    )


def orientation_of_point(g: Graph, x: Sequence) -> Orientation:
    """Orientation induced by a point off the graphical arrangement (``i -> j`` iff ``x_i < x_j``)."""
    arcs = []
    for i, j in g.edges:
        if x[i - 1] == x[j - 1]:
            raise ValueError("point lies on the graphical arrangement")
        arcs.append((i, j) if x[i - 1] < x[j - 1] else (j, i))
    return Orientation(tuple(arcs))


def region_orientation_bijection(g: Graph) -> bool:
    """Sign vectors of realized regions of H_G ↔ acyclic orientations, bijectively.

    Each region is sampled by a generic point (a permutation of distinct
    values); the map region -> orientation must hit each acyclic orientation
    exactly once.
    """
    arr = g.arrangement()
    regions = {}
    for perm in product(range(g.n), repeat=g.n):
        if len(set(perm)) != g.n:
            continue
        sv = arr.sign_vector(perm)
        o = orientation_of_point(g, perm)
        if regions.setdefault(sv, o) != o:
            return False
    orients = list(regions.values())
    return len(set(orients)) == len(orients) and set(orients) == set(acyclic_orientations(g))


# ---------------------------------------------------------------------------
# inside-out polytopes


@dataclass
class InsideOutPolytope:
    polytope: Polytope
    arrangement: Arrangement
    _regions: list | None = field(default=None, repr=False, compare=False)
    _counts: dict = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        if self.polytope.ambient != self.arrangement.dim:
            raise ValueError("polytope and arrangement live in different spaces")

    def realized_regions(self) -> list[tuple[int, ...]]:
        if self._regions is None:
            self._regions = self._find_regions()
        return self._regions

    def _find_regions(self) -> list[tuple[int, ...]]:
        """Sign vectors of the regions of ``P° \\ ∪H`` (P full-dimensional).

        The closure of a region is a polytope whose vertices are points of
        ``P`` cut out by ``d`` planes drawn from H and the facet planes. For a
        sign vector, average the candidate points whose signs are compatible
        with it: the average lies strictly inside the region exactly when the
        region is nonempty.
        """
        p, arr = self.polytope, self.arrangement
        d = p.ambient
        if p.dim != d:
            raise ValueError("region enumeration needs a full-dimensional polytope")
        planes = list(arr.hyperplanes) + [Hyperplane(tuple(a), b) for a, b in p.ambient_facets()]
        cand = sorted(x for x in _zero_dim_flats(d, planes) if p.contains(x))
        m = len(arr)
        sums: dict[tuple[int, ...], list] = {}
        for x in cand:
            s = arr.sign_vector(x)
            free = [i for i in range(m) if s[i] == 0]
            for bits in product((-1, 1), repeat=len(free)):
                sigma = list(s)
                for i, b in zip(free, bits):
                    sigma[i] = b
                acc = sums.setdefault(tuple(sigma), [0, [Fraction(0)] * d])
                acc[0] += 1
                acc[1] = [a + c for a, c in zip(acc[1], x)]
        out = []
        for sigma in sorted(sums):
            count, total = sums[sigma]
            centroid = tuple(c / count for c in total)
            if arr.sign_vector(centroid) == sigma and p.contains(centroid, interior=True):
                out.append(sigma)
        return out

    def _integer_hyperplanes(self):
        rows, offs = [], []
        for h in self.arrangement.hyperplanes:
            L = lcm(h.offset.denominator, *(c.denominator for c in h.normal))
            rows.append([int(c * L) for c in h.normal])
            offs.append(int(h.offset * L))
        return rows, offs

    def counts(self, t: int, interior: bool = False) -> tuple[int, int]:
        """``(I, O)`` at dilation ``t``.

        ``I`` counts lattice points of ``tP`` (of ``tP°`` if ``interior``) off
        every hyperplane; ``O`` sums, over lattice points of ``tP`` (or tP°),
        the number of realized closed regions containing the point.
        """
        key = (t, interior)
        if key in self._counts:
            return self._counts[key]
        m = len(self.arrangement)
        regions = self.realized_regions()
        sig = np.array(regions, dtype=np.int64).reshape(len(regions), m)
        rows, offs = self._integer_hyperplanes()
        N = np.array(rows, dtype=object).reshape(m, self.polytope.ambient)
        b = np.array(offs, dtype=object) * t
        I = O = 0
        for chunk in _points_chunks(self.polytope, t, interior):
            S = np.sign((chunk.astype(object) @ N.T - b).astype(np.int64)) if m else np.zeros((len(chunk), 0), dtype=np.int64)
            I += int(np.count_nonzero(np.all(S != 0, axis=1)))
            inside = (S[:, None, :] == 0) | (S[:, None, :] == sig[None, :, :])
            O += int(np.count_nonzero(np.all(inside, axis=2)))
        self._counts[key] = (I, O)
        return I, O


def _zero_dim_flats(d: int, planes: Sequence[Hyperplane]) -> set[tuple[Fraction, ...]]:
    """Points where some ``d`` of the planes meet, via intersection closure."""
    top = ambient_flat(d)
    found = {top}
    frontier = [top]
    points = set()
    while frontier:
        nxt = []
        for f in frontier:
            for h in planes:
                g = f.intersect(h)
                if g is None or g in found:
                    continue
                found.add(g)
                if g.dim == 0:
                    points.add(tuple(g.parametrization[0]))
                else:
                    nxt.append(g)
        frontier = nxt
    return points


def inside_out_counts(iop: InsideOutPolytope, t: int, interior: bool = False) -> tuple[int, int]:
    return iop.counts(t, interior)


@lru_cache(maxsize=256)
def coloring_iop(g: Graph) -> InsideOutPolytope:
    """Unit cube ``[0,1]^V`` with the graphical arrangement."""
    return InsideOutPolytope(Polytope(cube_points(g.n)), g.arrangement())


def greene_multiplicity(g: Graph, x: Sequence[int]) -> int:
    """Number of acyclic orientations compatible with ``x`` (closed regions at ``x``)."""
    return sum(1 for o in acyclic_orientations(g) if o.compatible(x))


def open_cube_colorings(g: Graph, t: int) -> int:
    """Lattice points of ``(t+1) [0,1]^V°`` off ``H_G``: the proper t-colorings."""
    return coloring_iop(g).counts(t + 1, interior=True)[0]


def closed_cube_pairs(g: Graph, t: int) -> int:
    """``O`` of the cube at dilation ``t-1`` with Greene multiplicities."""
    aos = acyclic_orientations(g)
    return sum(sum(1 for o in aos if o.compatible(x)) for x in product(range(t), repeat=g.n))


def inside_out_identity(iop: InsideOutPolytope, horizon: int) -> bool:
    """Interpolate ``I_{P°}`` and check ``I_{P°}(-t) = (-1)^dim P  O_P(t)`` for ``1 <= t <= horizon``.

    ``I_{P°}`` has degree ``dim P``, so ``dim P + 1`` nodes pin it; two
    extra nodes guard the interpolation.
    """
    d = iop.polytope.dim
    nodes = list(range(1, d + 4))
    values = [iop.counts(t, interior=True)[0] for t in nodes]
    poly = poly_interpolate(list(zip(nodes[: d + 1], values[: d + 1])))
    if any(poly(t) != v for t, v in zip(nodes, values)):
        return False
    sign = (-1) ** d
    return all(poly(-t) == sign * iop.counts(t)[1] for t in range(1, horizon + 1))


def coloring_reciprocity_witness(g: Graph, horizon: int):
    """First failing ``(t, which, lhs, rhs)`` among the three checks, else None."""
    if g.has_loop:
        raise ValueError("reciprocity check needs a loopless graph")
    c = chromatic_polynomial(g)
    sign = (-1) ** g.n
    for t in range(1, horizon + 1):
        brute = proper_colorings_brute(g, t)
        geo = open_cube_colorings(g, t)
        if brute != geo:
            return (t, "proper colorings vs open cube", brute, geo)
        pairs = compatible_pairs(g, t)
        recip = sign * c(-t)
        if recip != pairs:
            return (t, "(-1)^n c(-t) vs compatible pairs", recip, pairs)
        O = coloring_iop(g).counts(t - 1)[1]
        if O != pairs:
            return (t, "compatible pairs vs O-count", pairs, O)
        greene = closed_cube_pairs(g, t)
        if greene != pairs:
            return (t, "compatible pairs vs Greene multiplicities", pairs, greene)
    return None


def coloring_reciprocity_check(g: Graph, horizon: int) -> bool:
    return coloring_reciprocity_witness(g, horizon) is None
