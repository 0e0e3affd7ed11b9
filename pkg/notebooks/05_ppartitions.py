# %% [markdown]
# # P-partitions and Stanley reciprocity
#
# Under a natural labeling the P-partitions split into half-open cells, one
# per linear extension. Each cell contributes ``z^maj`` (weak) or
# ``z^amaj`` (strict) over ``(1 - z)(1 - z^2)...(1 - z^d)``.

# %%
from reciprocity.algebra import gf_reciprocal, gf_series_prefix
from reciprocity.poset import Poset
from reciprocity.ppartition import (
    PPartitionSpec,
    cell_decomposition_check,
    extension_table,
    lambda_poset,
    ppartition_counts,
    ppartition_gf,
    stanley_reciprocity_check,
)

# %%
lam = lambda_poset()
for row in extension_table(lam):
    print(row.sigma, sorted(row.stats.des), row.stats.maj, sorted(row.stats.asc), row.stats.amaj)

# %%
weak = ppartition_gf(PPartitionSpec(lam))
strict = ppartition_gf(PPartitionSpec(lam, strict=True))
print(weak, "|", strict)
print(gf_series_prefix(weak, 8), ppartition_counts(PPartitionSpec(lam), 8))
print(gf_reciprocal(weak))
print(stanley_reciprocity_check(lam))

# %% [markdown]
# A poset that is not naturally labeled is relabeled along a topological
# order; the relabeling is kept so results map back.

# %%
vee = Poset(3, [(3, 1), (2, 1)])
spec = PPartitionSpec.of(vee)
print(spec.relabeling, spec.poset == lam)
print(cell_decomposition_check(spec, 6))
