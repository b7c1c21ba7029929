# %% [markdown]
# # Numerical equivalence: the quotient by Ann P
#
# P is the sum of all Schubert classes. The sum pairing adds up every
# coefficient of a product; its radical is Ann P, and the quotient has a
# basis indexed by the half box G_S.

# %%
from qschubert.cohclass import CohClass
from qschubert.partitions import BoxContext
from qschubert.quotient import ann_p, ideal_comparison_check, positivity_experiment, psi_of, reduce_to_gs, annihilator_check

for k, n in [(1, 2), (2, 4), (2, 5), (3, 6), (4, 8)]:
    ctx = BoxContext(k, n)
    print(annihilator_check(ctx).line())

# %% [markdown]
# Relations identifying orbits under conjugation and the Z/n action live
# inside the ideal; from G(3,6) on they no longer generate it.

# %%
for k, n in [(2, 4), (2, 5), (3, 6), (4, 8)]:
    print(ideal_comparison_check(BoxContext(k, n)).detail)

# %% [markdown]
# Reducing a class to the G_S basis and mapping it through psi, which turns
# the sum pairing into the dot product.

# %%
ctx = BoxContext(4, 8)
red = reduce_to_gs(CohClass.schubert(ctx, (3, 2, 1)))
print(red)
print(psi_of(red, ctx))
print("kernel dim", ann_p(ctx).kernel_dim)

# %% [markdown]
# The positivity experiment records whether psi of every reduced class has
# nonnegative coordinates.

# %%
for k, n in [(2, 4), (2, 5), (3, 6), (4, 8)]:
    rep = positivity_experiment(BoxContext(k, n))
    print((k, n), rep.all_nonnegative, sorted(rep.denominators))
