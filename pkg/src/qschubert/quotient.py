"""The sum pairing, its radical Ann P, and the quotient R_P.

``<A, B>_s`` is the sum of all Schubert coefficients of ``A * B``. Its Gram
matrix is integral and symmetric, so everything below is exact linear
algebra over ``Fraction``: the radical is a nullspace, ideal membership is a
rank computation, and reduction onto the G_S classes is one linear solve.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import linalg
from .cohclass import CohClass
from .partitions import (
    BoxContext,
    Partition,
    conjugate_diagram,
    contains,
    degree,
    embed,
    in_gs,
    partition,
    poincare_dual,
)
from .quantum import conj, qprod, schubert_product, zn_shift
from .report import CheckReport
from .schur import lr_coefficient


def sum_pairing(a: CohClass, b: CohClass) -> Fraction:
    return sum(qprod(a, b).terms.values(), Fraction(0))


@lru_cache(maxsize=None)
def gram_matrix(ctx: BoxContext) -> tuple:
    B = ctx.basis
    N = len(B)
    G = [[0] * N for _ in range(N)]
    for i in range(N):
        for j in range(i, N):
            s = sum(schubert_product(B[i], B[j], ctx).values())
            G[i][j] = G[j][i] = s
    return tuple(tuple(row) for row in G)


@dataclass(frozen=True)
class QuotientData:
    ctx: BoxContext
    gram: tuple  # N x N ints
    ann_basis: list  # kernel vectors (lists of Fraction), length N each
    gs_list: tuple  # G_S partitions, length m
    reduction: list  # m x N Fractions; column j is basis class j mod Ann P
    psi_matrix: list  # m x m ints, row alpha = psi(S_alpha) over v_nu
    gram_rank: int = field(default=0)

    @property
    def kernel_dim(self) -> int:
        return len(self.ann_basis)


def _psi_matrix(ctx: BoxContext) -> list[list[int]]:
    gs = ctx.gs_basis
    # <dual(S_alpha), T_tau, T_nu> = coefficient of S_alpha in T_tau * T_nu
    rows = []
    for alpha in gs:
        row = []
        for nu in gs:
            row.append(sum(schubert_product(tau, nu, ctx).get(alpha, 0) for tau in gs))
        rows.append(row)
    return rows


@lru_cache(maxsize=None)
def ann_p(ctx: BoxContext) -> QuotientData:
    G = [list(row) for row in gram_matrix(ctx)]
    N = len(G)
    kernel = linalg.nullspace(G, N)
    gs = ctx.gs_basis
    gs_idx = [ctx.index[a] for a in gs]
    m = len(gs)
    # solve G_SS c = G[gs, j] for every basis class j at once
    aug = [[G[a][b] for b in gs_idx] + [G[a][j] for j in range(N)] for a in gs_idx]
    R, pivots = linalg.rref(aug, m)
    if pivots != list(range(m)):
        raise ArithmeticError(f"sum pairing is degenerate on G_S of {ctx}")
    reduction = [[R[i][m + j] for j in range(N)] for i in range(m)]
    return QuotientData(ctx, gram_matrix(ctx), kernel, gs, reduction, _psi_matrix(ctx),
                        N - len(kernel))


def reduce_to_gs(a: CohClass) -> dict[Partition, Fraction]:
    """Representative of ``a`` modulo Ann P in the span of the G_S classes."""
    q = ann_p(a.ctx)
    v = a.vector()
    out = {}
    for i, alpha in enumerate(q.gs_list):
        c = sum((r * x for r, x in zip(q.reduction[i], v) if x), Fraction(0))
        if c:
            out[alpha] = c
    return out


def psi(alpha, ctx: BoxContext) -> dict[Partition, int]:
    """psi(S_alpha) on the basis v_nu, nu in G_S."""
    alpha = partition(alpha)
    if not in_gs(alpha, ctx):
        raise ValueError(f"{list(alpha)} is outside G_S of {ctx}")
    q = ann_p(ctx)
    row = q.psi_matrix[q.gs_list.index(alpha)]
    return {nu: c for nu, c in zip(q.gs_list, row) if c}


def psi_of(combo: dict, ctx: BoxContext) -> dict[Partition, Fraction]:
    """Linear extension of psi to a combination of G_S classes."""
    acc: dict[Partition, Fraction] = {}
    for alpha, c in combo.items():
        for nu, x in psi(alpha, ctx).items():
            acc[nu] = acc.get(nu, Fraction(0)) + c * x
    return {nu: acc[nu] for nu in ctx.gs_basis if acc.get(nu)}


# --- checks -----------------------------------------------------------------


def _ideal_vectors(ctx: BoxContext, generators) -> list[list[Fraction]]:
    vecs = []
    for g in generators:
        if g.is_zero():
            continue
        for mu in ctx.basis:
            v = qprod(g, CohClass.schubert(ctx, mu)).vector()
            if any(v):
                vecs.append(v)
    return vecs


def sigma_difference_generators(ctx: BoxContext) -> list[CohClass]:
    """sigma_{k-i} - sigma_i for 0 <= i <= k, with sigma_0 = 1."""
    s = lambda i: CohClass.sigma(ctx, i)  # noqa: E731
    return [s(ctx.k - i) - s(i) for i in range(ctx.k + 1)]


def annihilator_check(ctx: BoxContext) -> CheckReport:
    q = ann_p(ctx)
    N, m = ctx.dim, ctx.gs_dim
    ideal = _ideal_vectors(ctx, sigma_difference_generators(ctx))
    G = q.gram
    ideal_in_kernel = all(not any(linalg.matvec(G, v)) for v in ideal)
    ideal_rank = linalg.rank(ideal) if ideal else 0
    ok = (q.kernel_dim == N - m and q.gram_rank == m and ideal_in_kernel
          and ideal_rank == q.kernel_dim)
    detail = (f"kernel dim {q.kernel_dim}, rank {q.gram_rank}, |G_S| {m}, "
              f"ideal rank {ideal_rank}, ideal in kernel {ideal_in_kernel}")
    return CheckReport(f"Ann P = ideal {ctx}", ok, detail,
                       {"kernel_dim": q.kernel_dim, "rank": q.gram_rank, "gs_dim": m,
                        "ideal_rank": ideal_rank})


def ideal_comparison_check(ctx: BoxContext) -> CheckReport:
    s = lambda i: CohClass.sigma(ctx, i)  # noqa: E731
    A = _ideal_vectors(ctx, sigma_difference_generators(ctx))
    B = _ideal_vectors(ctx, [conj(s(i)) - s(i) for i in range(ctx.k + 1)]
                       + [s(ctx.k) - CohClass.one(ctx)])
    small = []
    for lam in ctx.basis:
        S = CohClass.schubert(ctx, lam)
        small.append((S - conj(S)).vector())
        for r in range(1, ctx.n):
            small.append((S - zn_shift(S, r)).vector())
    small = [v for v in small if any(v)]
    ra, rb, rab = linalg.rank(A), linalg.rank(B), linalg.rank(A + B)
    rs = linalg.rank(small) if small else 0
    ras = linalg.rank(A + small) if (A or small) else 0
    equal = ra == rb == rab
    contained = ras == ra
    strict = contained and rs < ra
    return CheckReport(
        f"ideal comparison {ctx}", equal and contained,
        f"rank sigma-ideal {ra}, conj/shift ideal {rb}, union {rab}; "
        f"orbit relations {rs} ({'strictly ' if strict else ''}contained: {contained})",
        {"rank_sigma": ra, "rank_conj": rb, "rank_orbit": rs, "strict": strict,
         "equal": equal, "contained": contained},
    )


def conjugate_product_check(lam, mu, ctx: BoxContext) -> CheckReport:
    """Coefficients of conj(S_lam) * S_mu against the A_lam A_mu^T prediction."""
    lam, mu = partition(lam), partition(mu)
    for p in (lam, mu):
        if not in_gs(p, ctx):
            raise ValueError(f"{list(p)} is outside G_S of {ctx}")
    gs = ctx.gs_basis

    def A(x):
        # A_x[alpha, beta] = <dual(S_x), T_alpha, T_beta> = coeff of S_x in T_alpha * T_beta
        return np.array([[schubert_product(a, b, ctx).get(x, 0) for b in gs] for a in gs],
                        dtype=object)

    pred = A(lam).dot(A(mu).T)
    prod = qprod(conj(CohClass.schubert(ctx, lam)), CohClass.schubert(ctx, mu))
    expected: dict[Partition, int] = {}
    for i, a in enumerate(gs):
        for j, b in enumerate(gs):
            if pred[i, j]:
                nu = embed(a, b, ctx)
                expected[nu] = expected.get(nu, 0) + int(pred[i, j])
    got = {p: int(c) for p, c in prod.items()}
    ok = got == expected and all(c.denominator == 1 for _, c in prod.items())
    return CheckReport(f"conj product {list(lam)} {list(mu)} {ctx}", ok,
                       f"{len(got)} terms" + ("" if ok else f", expected {len(expected)}"),
                       {"matrix": pred})


def tableau_pair_count(lam, mu, alpha, beta) -> int:
    """Sum over nu of c^lam_{alpha,nu} * c^mu_{beta,nu}: pairs of LR skew
    tableaux on lam/alpha and mu/beta with equal content."""
    from .partitions import partitions_of

    lam, mu, alpha, beta = map(partition, (lam, mu, alpha, beta))
    size = degree(lam) - degree(alpha)
    if size != degree(mu) - degree(beta) or size < 0:
        return 0
    return sum(lr_coefficient(alpha, nu, lam) * lr_coefficient(beta, nu, mu)
               for nu in partitions_of(size))


def numerical_equivalence_check(ctx: BoxContext) -> CheckReport:
    G = gram_matrix(ctx)
    bad = []
    for lam in ctx.basis:
        row = G[ctx.index[lam]]
        S = CohClass.schubert(ctx, lam)
        images = [conj(S)] + [zn_shift(S, r) for r in range(1, ctx.n)]
        for img in images:
            other = [sum(c * G[ctx.index[p]][j] for p, c in img.items()) for j in range(ctx.dim)]
            if list(row) != other:
                bad.append(lam)
                break
    return CheckReport(f"numerical equivalence of orbits {ctx}", not bad,
                       f"{len(bad)} failing classes")


def psi_checks(ctx: BoxContext) -> list[CheckReport]:
    q = ann_p(ctx)
    gs = q.gs_list
    P = q.psi_matrix
    tri_bad = [
        (a, nu) for i, a in enumerate(gs) for j, nu in enumerate(gs)
        if (P[i][j] != 0 and not contains(a, nu)) or (a == nu and P[i][j] != 1)
    ]
    G = q.gram
    dot_bad = [
        (a, b) for i, a in enumerate(gs) for j, b in enumerate(gs)
        if sum(x * y for x, y in zip(P[i], P[j])) != G[ctx.index[a]][ctx.index[b]]
    ]
    lr_bad = [
        (a, nu) for i, a in enumerate(gs) for j, nu in enumerate(gs)
        if P[i][j] != sum(lr_coefficient(tau, nu, a) for tau in gs)
    ]
    return [
        CheckReport(f"psi unipotent triangular {ctx}", not tri_bad, f"{len(tri_bad)} bad entries"),
        CheckReport(f"psi turns sum pairing into dot product {ctx}", not dot_bad,
                    f"{len(dot_bad)} bad pairs"),
        CheckReport(f"psi entries equal classical LR sums {ctx}", not lr_bad,
                    f"{len(lr_bad)} bad entries"),
    ]


def spectrum_consistency_check(ctx: BoxContext, root_choice=None, tol: float = 1e-9) -> CheckReport:
    """Real points with sigma_k = 1 are counted by G_S and labelled by the
    conjugation-invariant classes of degree 0 mod n."""
    from .spectrum import RootChoice, all_points

    pts = all_points(ctx, root_choice or RootChoice())
    real = {
        p.label for p in pts
        if np.max(np.abs(p.coords.imag)) < tol and abs(p.coords[-1] - 1) < tol
    }
    invariant = {
        lam for lam in ctx.basis
        if degree(lam) % ctx.n == 0 and conjugate_diagram(lam, ctx) == lam
    }
    ok = len(real) == ctx.gs_dim and real == invariant
    return CheckReport(f"Spec R_P points {ctx}", ok,
                       f"{len(real)} real points with sigma_k = 1, |G_S| = {ctx.gs_dim}")


@dataclass
class PositivityReport:
    ctx: BoxContext
    rows: list  # (lam, reduce_to_gs dict, psi vector dict, nonnegative flag)

    @property
    def all_nonnegative(self) -> bool:
        return all(r[3] for r in self.rows)

    @property
    def denominators(self) -> set[int]:
        return {c.denominator for r in self.rows for c in r[1].values()}

    def row(self, lam):
        lam = partition(lam)
        return next(r for r in self.rows if r[0] == lam)


def positivity_experiment(ctx: BoxContext) -> PositivityReport:
    """psi(reduce_to_gs(S_lam)) for every box class; observed, never asserted."""
    rows = []
    for lam in ctx.basis:
        red = reduce_to_gs(CohClass.schubert(ctx, lam))
        vec = psi_of(red, ctx)
        rows.append((lam, red, vec, all(c >= 0 for c in vec.values())))
    return PositivityReport(ctx, rows)


def dual_class(lam, ctx: BoxContext) -> CohClass:
    return CohClass.schubert(ctx, poincare_dual(partition(lam), ctx))
