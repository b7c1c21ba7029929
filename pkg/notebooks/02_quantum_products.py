# %% [markdown]
# # Quantum products at q = 1 and their symmetries
#
# Products are computed with the rim-hook rule: multiply classically, then
# strip n-ribbons until the diagram fits the box.

# %%
from qschubert.cohclass import CohClass
from qschubert.partitions import BoxContext
from qschubert.quantum import conj, gw, qprod, rim_hook_reduce, zn_shift

ctx = BoxContext(2, 4)
S = lambda lam: CohClass.schubert(ctx, lam)  # noqa: E731

print(qprod(S((1,)), S((2, 1))))
print(S((1,)) ** 4)
print("reduce [4]:", rim_hook_reduce((4,), ctx))

# %% [markdown]
# Multiplying by sigma_k permutes Schubert classes, generating a Z/n action.
# Its n-th power is the identity.

# %%
orbit = [zn_shift(S(()), r) for r in range(ctx.n)]
print([str(x) for x in orbit])
print(CohClass.sigma(ctx, ctx.k) ** ctx.n == CohClass.one(ctx))

# %% [markdown]
# Conjugation is an involution and matches the diagram rule. The three-point
# numbers are symmetric in their arguments.

# %%
big = BoxContext(4, 8)
x = CohClass.schubert(big, (2, 1))
print(conj(x), conj(conj(x)) == x)
a, b, c = S((1,)), S((1,)), S((2,))
print(gw(a, b, c), gw(c, a, b))
