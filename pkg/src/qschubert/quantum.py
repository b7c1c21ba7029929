"""Quantum product of G(k, n) at q = 1 and its symmetries.

Schubert classes are Schur polynomials in ``l = n - k`` variables subject to
``x**n = (-1)**(l - 1)``. A shape ``nu`` with ``nu[0] > k`` is reduced on its
exponent vector ``beta = nu + (l-1, ..., 1, 0)``: subtract ``n`` from the
largest entry and re-sort. That is the removal of an n-rim hook starting at
the end of row 1; with hook height ``h`` the step has sign
``(-1)**(l - 1) * (-1)**(h - 1)``. A collision of exponents kills the term.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from functools import lru_cache

from .cohclass import CohClass
from .partitions import BoxContext, Partition, fits_box, partition, poincare_dual
from .schur import schur_product

__all__ = [
    "CohClass",
    "rim_hook_reduce",
    "schubert_product",
    "qprod",
    "gw",
    "zn_shift",
    "conj",
    "phi",
    "degree_mod_n",
    "in_r0",
    "in_rinv",
    "poincare_dual_class",
]


def rim_hook_reduce(nu: Partition, ctx: BoxContext) -> tuple[int, Partition | None]:
    """Reduce ``nu`` (at most l rows) into the box.

    Returns ``(sign, shape)``; ``shape`` is None when the term vanishes.
    """
    l, k, n = ctx.l, ctx.k, ctx.n
    if len(nu) > l:
        return 0, None
    beta = [p + l - 1 - j for j, p in enumerate(list(nu) + [0] * (l - len(nu)))]
    sign = 1
    while beta[0] - (l - 1) > k:
        top = beta[0] - n
        if top < 0 or top in beta:
            return 0, None
        rest = beta[1:]
        # hook height = number of rows the exponent passes, plus its own row
        h = 1 + sum(1 for b in rest if b > top)
        if (l - 1 + h - 1) % 2:
            sign = -sign
        beta = sorted(rest + [top], reverse=True)
    shape = partition(b - (l - 1 - j) for j, b in enumerate(beta))
    return sign, shape


@lru_cache(maxsize=None)
def _schubert_product(lam: Partition, mu: Partition, ctx: BoxContext) -> tuple:
    acc: dict[Partition, int] = defaultdict(int)
    for nu, c in schur_product(lam, mu, ctx.l).items():
        sign, shape = rim_hook_reduce(nu, ctx)
        if shape is not None:
            acc[shape] += sign * c
    return tuple((p, c) for p, c in sorted(acc.items(), key=lambda t: ctx.index[t[0]]) if c)


def schubert_product(lam, mu, ctx: BoxContext) -> dict[Partition, int]:
    """Structure constants of S_lam * S_mu as a dict."""
    lam, mu = partition(lam), partition(mu)
    for p in (lam, mu):
        if not fits_box(p, ctx):
            raise ValueError(f"{list(p)} does not fit the box of {ctx}")
    if ctx.index[lam] > ctx.index[mu]:
        lam, mu = mu, lam
    return dict(_schubert_product(lam, mu, ctx))


def qprod(a: CohClass, b: CohClass) -> CohClass:
    a._check(b)
    acc: dict[Partition, Fraction] = defaultdict(Fraction)
    for lam, c in a.items():
        for mu, d in b.items():
            cd = c * d
            for nu, m in schubert_product(lam, mu, a.ctx).items():
                acc[nu] += cd * m
    return CohClass(a.ctx, acc)


def poincare_dual_class(a: CohClass) -> CohClass:
    return CohClass(a.ctx, {poincare_dual(lam, a.ctx): c for lam, c in a.items()})


def gw(a: CohClass, b: CohClass, c: CohClass) -> Fraction:
    """Three-point invariant <a, b, c>: pair a*b against c by Poincare duality."""
    a._check(b)
    a._check(c)
    prod = qprod(a, b)
    return sum((x * prod.coefficient(poincare_dual(lam, a.ctx)) for lam, x in c.items()),
               Fraction(0))


def zn_shift(a: CohClass, steps: int) -> CohClass:
    """Multiply by sigma_k**(steps mod n)."""
    s = CohClass.sigma(a.ctx, a.ctx.k)
    out = a
    for _ in range(steps % a.ctx.n):
        out = qprod(out, s)
    return out


def conj(a: CohClass) -> CohClass:
    """Complex conjugation: S_lam maps to the dual of S_lam * C_P."""
    return poincare_dual_class(qprod(a, CohClass.point_class(a.ctx)))


def phi(a: CohClass) -> CohClass:
    return qprod(a, conj(a))


def degree_mod_n(a: CohClass) -> int | str:
    """Common degree mod n of the support, or ``"mixed"``.

    The zero class is reported as degree 0.
    """
    degs = {sum(lam) % a.ctx.n for lam in a.support()}
    if len(degs) > 1:
        return "mixed"
    return degs.pop() if degs else 0


def in_r0(a: CohClass) -> bool:
    return degree_mod_n(a) == 0


def in_rinv(a: CohClass) -> bool:
    return conj(a) == a
