# %% [markdown]
# # Young diagrams in a box and Littlewood-Richardson products
#
# Schubert classes of G(k, n) are indexed by partitions fitting an l x k box,
# with l = n - k. This script walks through the combinatorics the rest of the
# package builds on.

# %%
from qschubert.partitions import BoxContext, conjugate_diagram, durfee, embed, poincare_dual
from qschubert.schur import lr_coefficient, lr_sum_lhs, lr_sum_rhs, schur_product

ctx = BoxContext(4, 8)
print(ctx, "has", ctx.dim, "classes;", ctx.gs_dim, "of them fit the half box G_S")
print(ctx.basis[:10])

# %% [markdown]
# Poincare duality takes the complement in the box. The diagram conjugation
# keeps the Durfee square and swaps the pieces right of and below it.

# %%
lam = (2, 1)
print("dual of", lam, "=", poincare_dual(lam, ctx))
print("durfee", durfee(lam), "conjugate", conjugate_diagram(lam, ctx))

# %% [markdown]
# Pairs of half-box diagrams glue into conjugation-invariant diagrams.

# %%
for a in ctx.gs_basis:
    nu = embed(a, a, ctx)
    print(a, "->", nu, "invariant:", conjugate_diagram(nu, ctx) == nu)

# %% [markdown]
# Classical products of Schur functions, and the coefficient-sum identity
# that falls out of the quotient construction later on.

# %%
print(schur_product((2, 1), (2, 1)))
print("c^{321}_{21,21} =", lr_coefficient((2, 1), (2, 1), (3, 2, 1)))
for a, b in [((1,), (1,)), ((2, 1), (2, 1)), ((3, 1), (2, 2))]:
    print(a, b, lr_sum_lhs(a, b), lr_sum_rhs(a, b))
