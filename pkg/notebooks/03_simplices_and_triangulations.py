# %% [markdown]
# # Simplex cones, triangulations and the Euler characteristic
#
# For a lattice simplex the Ehrhart series numerator is the height
# generating polynomial of the fundamental parallelepiped; the open
# parallelepiped gives the interior numerator, which is the reversed one.

# %%
import random

from reciprocity import suites
from reciprocity.geometry import (
    Polytope,
    Simplex,
    cube_points,
    ehrhart_series,
    euler_characteristic,
    face_lattice,
    normalized_volume,
    normalized_volume_from_triangulation,
    regular_triangulation,
    simplex_ehrhart_series,
    simplex_h_vectors,
    triangulation_mobius_check,
)

# %%
seg = Simplex([(-1,), (2,)])
print(simplex_ehrhart_series(seg))
h, ht = simplex_h_vectors(seg)
print(h, "|", ht)

# %% [markdown]
# A regular triangulation from a random lifting. The unit square splits
# into two triangles whichever diagonal is chosen.

# %%
sq = Polytope(cube_points(2))
tri = regular_triangulation(sq, seed=3)
print(tri.simplices, tri.normalized_volumes())
print(triangulation_mobius_check(tri))

# %%
rng = random.Random(2)
for _ in range(5):
    p = suites.random_full_polytope(rng)
    t = regular_triangulation(p)
    print(p.dim, len(t.simplices), normalized_volume_from_triangulation(t) == normalized_volume(p))
    print("   ", ehrhart_series(p))

# %% [markdown]
# Euler-Poincaré: the face-number polynomial evaluated at -1 is 1, and the
# Möbius function of the face lattice alternates with dimension.

# %%
cube = Polytope(cube_points(3))
fl = face_lattice(cube)
print(fl.f_vector(), euler_characteristic(cube), fl.mobius_matches_closed_form())
