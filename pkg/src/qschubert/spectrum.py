"""Points of Spec R and Schubert classes as functions on them.

The point attached to a box partition ``lam`` uses the half-integer tuple
``i_j = (l + 1)/2 + lam_j - j`` and the ``l`` variables ``x_j = xi**(-i_j)``.
Its coordinates are ``(h_1(x), ..., h_k(x))``, the values of sigma_1..sigma_k.
With this sign the value of sigma_k at ``P_lam`` is ``xi**|lam|`` and the
G(2, 4) table for ``xi = i`` comes out as printed in the literature.

All arithmetic here is double precision; callers pass tolerances.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd

import numpy as np

from .partitions import BoxContext, Partition, degree, fits_box, padded, partition
from .report import CheckReport

TOL_IDENTITY = 1e-9
TOL_INTEGER = 1e-6


@dataclass(frozen=True)
class RootChoice:
    """``xi = exp(2 pi i e / n)`` and, for even ``l``, ``xi**(1/2) = exp(pi i h / n)``.

    ``half_exponent`` defaults to the odd representative of ``e`` mod ``n``.
    """

    xi_exponent: int = 1
    half_exponent: int | None = None

    def validate(self, ctx: BoxContext) -> "RootChoice":
        n, e = ctx.n, self.xi_exponent
        if gcd(e, n) != 1:
            raise ValueError(f"xi exponent {e} is not coprime to n={n}")
        h = self.half_exponent
        if h is None:
            h = e if gcd(e, 2 * n) == 1 else e + n
        elif (h - e) % n or gcd(h, 2 * n) != 1:
            raise ValueError(
                f"half exponent {h} does not give a primitive 2n-th root squaring to xi"
            )
        return RootChoice(e % n, h % (2 * n))

    def xi(self, ctx: BoxContext) -> complex:
        return complex(np.exp(2j * np.pi * (self.xi_exponent % ctx.n) / ctx.n))


STANDARD_ROOTS = RootChoice(1, 1)  # xi = i, xi^(1/2) = (1 + i)/sqrt(2) when n = 4


def index_tuple(lam: Partition, ctx: BoxContext) -> tuple[Fraction, ...]:
    p = padded(lam, ctx.l)
    return tuple(Fraction(ctx.l + 1, 2) + p[j - 1] - j for j in range(1, ctx.l + 1))


def _variables(lam: Partition, ctx: BoxContext, root: RootChoice) -> np.ndarray:
    root = root.validate(ctx)
    n = ctx.n
    out = []
    for i in index_tuple(lam, ctx):
        twice = int(2 * i)
        if ctx.l % 2:
            m = (-root.xi_exponent * (twice // 2)) % n
            out.append(np.exp(2j * np.pi * m / n))
        else:
            m = (-root.half_exponent * twice) % (2 * n)
            out.append(np.exp(1j * np.pi * m / n))
    return np.array(out, dtype=complex)


def complete_homogeneous(x: np.ndarray, upto: int) -> np.ndarray:
    """``[h_0(x), ..., h_upto(x)]``."""
    h = np.zeros(upto + 1, dtype=complex)
    h[0] = 1
    for v in x:
        for i in range(1, upto + 1):
            h[i] += v * h[i - 1]
    return h


@dataclass(frozen=True)
class SpectrumPoint:
    ctx: BoxContext
    label: Partition
    index_tuple: tuple
    variables: np.ndarray
    coords: np.ndarray  # values of sigma_1 .. sigma_k
    root_choice: RootChoice

    def sigma(self, i: int) -> complex:
        return 1.0 if i == 0 else complex(self.coords[i - 1])


def point(lam, ctx: BoxContext, root_choice: RootChoice = RootChoice()) -> SpectrumPoint:
    lam = partition(lam)
    if not fits_box(lam, ctx):
        raise ValueError(f"{list(lam)} does not fit the box of {ctx}")
    root = root_choice.validate(ctx)
    x = _variables(lam, ctx, root)
    h = complete_homogeneous(x, ctx.k)
    return SpectrumPoint(ctx, lam, index_tuple(lam, ctx), x, h[1:], root)


def _bialternant(lam: Partition, x: np.ndarray) -> complex:
    l = len(x)
    p = np.array(padded(lam, l))
    top = np.arange(l - 1, -1, -1)
    num = np.linalg.det(x[:, None] ** (p + top)[None, :])
    den = np.linalg.det(x[:, None] ** top[None, :])
    if abs(den) < 1e-12:
        raise ValueError("repeated variables: singular Vandermonde")
    return complex(num / den)


def evaluate(lam, p: SpectrumPoint) -> complex:
    """Value of S_lam at ``p`` via the bialternant formula in l variables."""
    lam = partition(lam)
    if not fits_box(lam, p.ctx):
        raise ValueError(f"{list(lam)} does not fit the box of {p.ctx}")
    return _bialternant(lam, p.variables)


def jacobi_trudi_value(lam, coords, k: int) -> complex:
    """det(sigma_{lam_i - i + j}) with sigma_0 = 1 and sigma_m = 0 outside 0..k."""
    lam = partition(lam)
    m = len(lam)
    if m == 0:
        return 1.0 + 0j

    def s(i):
        if i == 0:
            return 1.0
        return coords[i - 1] if 0 < i <= k else 0.0

    mat = np.array([[s(lam[i] - i + j) for j in range(m)] for i in range(m)], dtype=complex)
    return complex(np.linalg.det(mat))


def ring_relation_residual(p: SpectrumPoint) -> float:
    """Largest residual of Y_{l+1}, ..., Y_{n-1}, Y_n + (-1)**l at ``p``.

    Y are the Segre classes, the coefficients of 1 / (1 + sigma_1 t + ... + sigma_k t**k).
    The constant term carries (-1)**l, not (-1)**k: for odd n only the former
    vanishes on the points that give nonnegative structure constants.
    """
    ctx = p.ctx
    sig = np.concatenate(([1.0], p.coords))
    Y = np.zeros(ctx.n + 1, dtype=complex)
    Y[0] = 1
    for i in range(1, ctx.n + 1):
        Y[i] = -sum(sig[j] * Y[i - j] for j in range(1, min(i, ctx.k) + 1))
    res = list(np.abs(Y[ctx.l + 1:ctx.n]))
    res.append(abs(Y[ctx.n] + (-1) ** ctx.l))
    return float(max(res))


def sigma_k_value(lam, ctx: BoxContext, root_choice: RootChoice = RootChoice()) -> complex:
    return evaluate((ctx.k,), point(lam, ctx, root_choice))


@dataclass(frozen=True)
class CharacterMatrix:
    """``entries[a, b]`` is the value of the a-th basis class at the b-th point."""

    ctx: BoxContext
    root_choice: RootChoice
    entries: np.ndarray

    def normalized(self) -> np.ndarray:
        """Divide each class's row by its value at P_1 (first column)."""
        return self.entries / self.entries[:, :1]


@lru_cache(maxsize=64)
def character_matrix(ctx: BoxContext, root_choice: RootChoice = RootChoice()) -> CharacterMatrix:
    root = root_choice.validate(ctx)
    basis = ctx.basis
    l = ctx.l
    X = np.array([_variables(lam, ctx, root) for lam in basis])  # points x variables
    top = np.arange(l - 1, -1, -1)
    E = np.array([padded(lam, l) for lam in basis]) + top[None, :]  # classes x l
    # powers[point, class, i, j] = X[point, i] ** E[class, j]
    powers = X[:, None, :, None] ** E[None, :, None, :]
    num = np.linalg.det(powers)
    den = np.linalg.det(X[:, :, None] ** top[None, None, :])
    M = (num / den[:, None]).T
    M.setflags(write=False)
    return CharacterMatrix(ctx, root, M)


def all_points(ctx: BoxContext, root_choice: RootChoice = RootChoice()) -> list[SpectrumPoint]:
    pts = [point(lam, ctx, root_choice) for lam in ctx.basis]
    C = np.array([p.coords for p in pts])
    if len(pts) > 1:
        dist = np.linalg.norm(C[:, None, :] - C[None, :, :], axis=-1)
        np.fill_diagonal(dist, np.inf)
        if dist.min() < TOL_INTEGER:
            raise ValueError(f"spectrum points of {ctx} are not separated")
    return pts


def double_specialization_check(ctx: BoxContext, root_choice: RootChoice = RootChoice(),
                                tol: float = TOL_IDENTITY) -> CheckReport:
    N = character_matrix(ctx, root_choice).normalized()
    dev = float(np.max(np.abs(N - N.T)))
    return CheckReport(f"double specialization {ctx}", dev < tol,
                       f"max deviation {dev:.3e}", {"max_deviation": dev})


def orbit_count_check(ctx: BoxContext) -> CheckReport:
    from .cohclass import CohClass
    from .quantum import schubert_product

    shift = {}
    for lam in ctx.basis:
        out = schubert_product(lam, (ctx.k,), ctx)
        if len(out) != 1 or next(iter(out.values())) != 1:
            return CheckReport(f"orbit count {ctx}", False,
                               f"sigma_k * S{list(lam)} is not a Schubert class")
        shift[lam] = next(iter(out))
    seen, orbits = set(), 0
    for lam in ctx.basis:
        if lam in seen:
            continue
        orbits += 1
        cur = lam
        while cur not in seen:
            seen.add(cur)
            cur = shift[cur]
    r0 = sum(1 for lam in ctx.basis if degree(lam) % ctx.n == 0)
    return CheckReport(f"orbit count {ctx}", orbits == r0,
                       f"{orbits} orbits, dim R_0 = {r0}", {"orbits": orbits, "dim_r0": r0})


def match_point(coords: np.ndarray, ctx: BoxContext, root_choice: RootChoice = RootChoice(),
                tol: float = TOL_INTEGER) -> Partition:
    pts = all_points(ctx, root_choice)
    C = np.array([p.coords for p in pts])
    dist = np.linalg.norm(C - coords[None, :], axis=1)
    best = int(np.argmin(dist))
    if dist[best] > tol:
        raise ValueError(f"no point of {ctx} within {tol} (closest {dist[best]:.2e})")
    return pts[best].label


def xi_action_on_points(p: SpectrumPoint, steps: int) -> SpectrumPoint:
    """Scale sigma_i by xi**(i * steps); the image is again a point."""
    ctx, root = p.ctx, p.root_choice
    zeta = np.exp(2j * np.pi * (root.xi_exponent * steps % ctx.n) / ctx.n)
    coords = p.coords * zeta ** np.arange(1, ctx.k + 1)
    label = match_point(coords, ctx, root)
    target = point(label, ctx, root)
    return SpectrumPoint(ctx, label, target.index_tuple, target.variables, coords, root)


def spectral_structure_constants(ctx: BoxContext, root_choice: RootChoice = RootChoice(),
                                 max_condition: float = 1e8) -> np.ndarray:
    """``C[a, b, c]``: coefficient of the c-th class in the product of the a-th
    and b-th, recovered by diagonalizing multiplication over the points."""
    M = np.asarray(character_matrix(ctx, root_choice).entries)
    cond = np.linalg.cond(M)
    if not np.isfinite(cond) or cond > max_condition:
        raise ValueError(f"character matrix of {ctx} ill-conditioned (cond {cond:.2e})")
    N = M.shape[0]
    C = np.empty((N, N, N), dtype=complex)
    MT = M.T
    for a in range(N):
        rhs = (M[a][None, :] * M).T  # points x b
        C[a] = np.linalg.solve(MT, rhs).T
    return C
