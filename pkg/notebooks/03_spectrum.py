# %% [markdown]
# # Schubert classes as functions on the spectrum
#
# The ring at q = 1 is semisimple; its points are labelled by box diagrams
# via roots of unity. Evaluating every class at every point gives the
# character matrix.

# %%
import numpy as np

from qschubert.partitions import BoxContext
from qschubert.spectrum import STANDARD_ROOTS, character_matrix, sigma_k_value, spectral_structure_constants
from qschubert.verify import structure_tensor

ctx = BoxContext(2, 4)
M = character_matrix(ctx, STANDARD_ROOTS)
np.set_printoptions(precision=3, suppress=True)
print(M.entries.T)  # rows are points

# %% [markdown]
# After dividing each class by its value at the first point the matrix is
# symmetric.

# %%
N = M.normalized()
print(np.abs(N - N.T).max())

# %% [markdown]
# sigma_k at P_lam is xi raised to the degree of lam.

# %%
for lam in ctx.basis:
    print(lam, np.round(sigma_k_value(lam, ctx), 6))

# %% [markdown]
# Diagonalizing multiplication over the points recovers the structure
# constants independently of the rim-hook rule.

# %%
ctx = BoxContext(3, 6)
C = spectral_structure_constants(ctx)
print("max deviation", np.abs(C - structure_tensor(ctx)).max())
