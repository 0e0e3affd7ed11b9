# %% [markdown]
# # Chromatic polynomials, acyclic orientations, inside-out polytopes
#
# ``(-1)^n c(-t)`` counts pairs of a t-coloring and a compatible acyclic
# orientation. The geometry behind it: proper colorings are lattice points
# of the open cube ``(t+1)(0,1)^n`` off the graphical arrangement, and the
# compatible pairs are the closed cube points counted with the number of
# regions whose closure contains them.

# %%
from reciprocity.graph_coloring import (
    Graph,
    acyclic_orientations,
    chromatic_polynomial,
    coloring_iop,
    compatible_pairs,
    inside_out_identity,
)

# %%
k3 = Graph.complete(3)
c = chromatic_polynomial(k3)
print(c, c(-1), len(acyclic_orientations(k3)))
print([compatible_pairs(k3, t) for t in range(1, 5)], [-c(-t) for t in range(1, 5)])

# %%
c4 = Graph.cycle(4)
print(chromatic_polynomial(c4), len(acyclic_orientations(c4)))
print(acyclic_orientations(c4)[0].to_dot("C4"))

# %% [markdown]
# The inside-out polytope of K2: the square cut by its diagonal. At
# interior dilation 7 it holds the 30 proper 6-colorings.

# %%
iop = coloring_iop(Graph.complete(2))
print(iop.realized_regions())
print([iop.counts(t, interior=True) for t in range(1, 8)])
print(inside_out_identity(iop, 4))
