# %% [markdown]
# # Hyperplane arrangements and region counts
#
# The characteristic polynomial is a Möbius sum over the intersection
# poset of flats. Evaluated at -1 it counts regions; deletion-restriction
# gives the same number without any Möbius function.

# %%
from reciprocity.arrangement import (
    Arrangement,
    Hyperplane,
    boolean_arrangement,
    braid_arrangement,
    characteristic_polynomial,
    flats,
    regions_deletion_restriction,
    regions_zaslavsky,
)

# %%
for d in range(2, 6):
    a = braid_arrangement(d)
    print(d, characteristic_polynomial(a), regions_zaslavsky(a), regions_deletion_restriction(a))

# %% [markdown]
# The Boolean arrangement has characteristic polynomial (t - 1)^d and 2^d
# orthants.

# %%
for d in range(1, 5):
    a = boolean_arrangement(d)
    print(d, characteristic_polynomial(a), regions_zaslavsky(a))

# %% [markdown]
# An affine example: three lines in the plane meeting pairwise in three
# points bound one triangle, so there are 7 regions.

# %%
lines = Arrangement(2, [Hyperplane((1, 0), 0), Hyperplane((0, 1), 0), Hyperplane((1, 1), 1)])
fp = flats(lines)
print(len(fp.flats), "flats")
print(characteristic_polynomial(lines), regions_zaslavsky(lines))
