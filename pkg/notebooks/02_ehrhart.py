# %% [markdown]
# # Ehrhart quasipolynomials and Ehrhart-Macdonald reciprocity
#
# Lattice points in dilates ``tP`` are counted by a vectorized integer
# scan; the counting function is interpolated per residue class mod the
# denominator of ``P``. Evaluating at ``-t`` gives the interior count up to
# the sign ``(-1)^dim P``.

# %%
from fractions import Fraction
import random

from reciprocity import suites
from reciprocity.geometry import Polytope, ehrhart, ehrhart_reciprocity_check, lattice_count, standard_simplex_points

# %%
tri = Polytope(standard_simplex_points(2))
q = ehrhart(tri)
print(q)
print([lattice_count(tri, t) for t in range(6)])
print([lattice_count(tri, t, interior=True) for t in range(1, 6)])
print([q(-t) for t in range(1, 6)])

# %% [markdown]
# A rational triangle gives a genuine quasipolynomial.

# %%
rt = Polytope([(0, 0), (Fraction(1, 2), 0), (0, Fraction(1, 3))])
qr = ehrhart(rt)
print(qr.period)
print(qr)

# %% [markdown]
# Reciprocity on seeded random lattice polytopes, some of them lower
# dimensional.

# %%
rng = random.Random(1)
polys = [suites.random_lattice_polytope(rng) for _ in range(10)]
print([(p.dim, ehrhart_reciprocity_check(p, 6)) for p in polys])
