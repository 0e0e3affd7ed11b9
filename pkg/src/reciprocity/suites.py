"""Seeded random instances shared by the tests and ``reciprocity verify``.

Every generator takes a ``random.Random`` and draws nothing else, so a
seed pins the whole suite.
"""

from __future__ import annotations

import random

from .arrangement import Arrangement, random_arrangement
from .geometry.polytope import Polytope
from .geometry.simplex import Simplex
from .graph_coloring import Graph
from .poset import Poset
from .ppartition import random_natural_poset


def random_lattice_polytope(rng: random.Random, max_dim: int = 3, coord: int = 3,
                            extra_points: int = 4) -> Polytope:
    """Hull of ``dim + 1 .. dim + 1 + extra_points`` random points of ``[-coord, coord]^dim``.

    The hull may come out lower-dimensional; that is deliberate.
    """
    n = rng.randint(1, max_dim)
    k = rng.randint(n + 1, n + 1 + extra_points)
    pts = [tuple(rng.randint(-coord, coord) for _ in range(n)) for _ in range(k)]
    return Polytope(pts)


def random_full_polytope(rng: random.Random, max_dim: int = 3, coord: int = 2,
                         extra_points: int = 3) -> Polytope:
    """Like :func:`random_lattice_polytope` but redrawn until full-dimensional."""
    while True:
        p = random_lattice_polytope(rng, max_dim, coord, extra_points)
        if p.dim == p.ambient:
            return p


def random_lattice_simplex(rng: random.Random, max_dim: int = 4, coord: int | None = None) -> Simplex:
    """Full-dimensional lattice simplex; coordinates in ``[-3, 3]`` up to
    dimension 3 and ``[-2, 2]`` in dimension 4 unless ``coord`` is given."""
    d = rng.randint(1, max_dim)
    c = coord if coord is not None else (3 if d <= 3 else 2)
    while True:
        pts = [tuple(rng.randint(-c, c) for _ in range(d)) for _ in range(d + 1)]
        p = Polytope(pts)
        if p.dim == d and len(p.vertices) == d + 1:
            return Simplex(pts)


def random_graph(rng: random.Random, max_nodes: int = 5) -> Graph:
    return Graph.random(rng, max_nodes)


def random_poset(rng: random.Random, max_size: int = 6) -> Poset:
    return random_natural_poset(rng, rng.randint(1, max_size))


def random_arr(rng: random.Random, max_dim: int = 4, max_hyperplanes: int = 6) -> Arrangement:
    return random_arrangement(rng, max_dim, max_hyperplanes)


SIZES = {
    # count of random instances per suite
    "tiny": 3,
    "small": 10,
    "medium": 30,
}
