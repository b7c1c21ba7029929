"""Verification suites shared by the CLI and the test suite.

Each suite returns a list of :class:`CheckReport`. Small contexts are swept
exhaustively through dense structure tensors; large ones are sampled with
a seeded RNG.
"""

from __future__ import annotations

import random
from itertools import permutations

import numpy as np

from .cohclass import CohClass
from .partitions import (
    BoxContext,
    conjugate_diagram,
    degree,
    embed,
    gs_from_invariant,
    partitions_of,
    poincare_dual,
)
from .quantum import conj, gw, qprod, schubert_product, zn_shift
from .quotient import (
    annihilator_check,
    conjugate_product_check,
    ideal_comparison_check,
    numerical_equivalence_check,
    psi_checks,
    spectrum_consistency_check,
    sum_pairing,
)
from .report import CheckReport
from .schur import lr_sum_lhs, lr_sum_rhs, schur_product
from .spectrum import (
    all_points,
    character_matrix,
    double_specialization_check,
    orbit_count_check,
    ring_relation_residual,
    RootChoice,
    sigma_k_value,
    spectral_structure_constants,
    TOL_IDENTITY,
    TOL_INTEGER,
    xi_action_on_points,
)

EXHAUSTIVE_LIMIT = 20  # basis size up to which triple sweeps are exhaustive


def structure_tensor(ctx: BoxContext) -> np.ndarray:
    """``C[a, b, c]``: coefficient of basis class c in basis a * basis b."""
    B = ctx.basis
    N = len(B)
    C = np.zeros((N, N, N), dtype=np.int64)
    for i in range(N):
        for j in range(i, N):
            for nu, m in schubert_product(B[i], B[j], ctx).items():
                C[i, j, ctx.index[nu]] = C[j, i, ctx.index[nu]] = m
    return C


def _perm(ctx: BoxContext, f) -> np.ndarray:
    return np.array([ctx.index[f(lam)] for lam in ctx.basis])


def _single(a: CohClass):
    (lam, c), = a.items()
    assert c == 1, a
    return lam


def quantum_checks(ctx: BoxContext, samples: int | None = None, seed: int = 0) -> list[CheckReport]:
    """Ring axioms, positivity and the symmetry identities of the quantum product."""
    N, n = ctx.dim, ctx.n
    C = structure_tensor(ctx)
    dual = _perm(ctx, lambda lam: poincare_dual(lam, ctx))
    bar = _perm(ctx, lambda lam: _single(conj(CohClass.schubert(ctx, lam))))
    shift = _perm(ctx, lambda lam: _single(zn_shift(CohClass.schubert(ctx, lam), 1)))
    T = C[:, :, dual]  # T[a, b, c] = <a, b, c>
    out = []

    exhaustive = samples is None and N <= EXHAUSTIVE_LIMIT
    if exhaustive:
        triples = [(a, b, c) for a in range(N) for b in range(N) for c in range(N)]
        label = "all triples"
    else:
        rng = random.Random(seed)
        triples = [tuple(rng.randrange(N) for _ in range(3)) for _ in range(samples or 200)]
        label = f"{len(triples)} seeded triples"
    ta = np.array(triples).T

    out.append(CheckReport(f"qprod commutative {ctx}", bool((C == C.transpose(1, 0, 2)).all())))
    unit = ctx.index[()]
    out.append(CheckReport(f"1 is the unit {ctx}", bool((C[unit] == np.eye(N, dtype=int)).all())))
    out.append(CheckReport(f"structure constants nonnegative {ctx}", bool((C >= 0).all()),
                           f"min {C.min()}"))
    if exhaustive:
        lhs = np.einsum("abd,dce->abce", C, C)
        rhs = np.einsum("bcd,ade->abce", C, C)
        assoc = bool((lhs == rhs).all())
    else:
        a, b, c = ta
        lhs = np.einsum("td,tde->te", C[a, b], C[:, c].transpose(1, 0, 2))
        rhs = np.einsum("td,tde->te", C[b, c], C[a])
        assoc = bool((lhs == rhs).all())
    out.append(CheckReport(f"qprod associative {ctx}", assoc, label))

    sym = all((T == T.transpose(p)).all() for p in permutations(range(3)))
    out.append(CheckReport(f"gw fully symmetric {ctx}", bool(sym)))

    a, b, c = ta
    out.append(CheckReport(f"conjugation identity <A,B,C> = <A^,B^,C-bar> {ctx}",
                           bool((T[a, b, c] == T[dual[a], dual[b], bar[c]]).all()), label))
    # coefficient of C in A * bar(B) equals coefficient of A in C * B
    out.append(CheckReport(f"partial inversion {ctx}",
                           bool((C[a, bar[b], c] == C[c, b, a]).all()), label))

    powers = [np.arange(N)]
    for _ in range(n):
        powers.append(shift[powers[-1]])
    cov_ok = True
    for s in range(n):
        for t in range(n):
            u = (-s - t) % n
            if not (T[powers[s][a], powers[t][b], powers[u][c]] == T[a, b, c]).all():
                cov_ok = False
    out.append(CheckReport(f"Z/n covariance {ctx}", cov_ok, label))

    out.append(CheckReport(f"sigma_k^n = 1 {ctx}", bool((powers[n] == np.arange(N)).all())))
    out.append(CheckReport(f"conj is an involution {ctx}", bool((bar[bar] == np.arange(N)).all())))
    diag = _perm(ctx, lambda lam: conjugate_diagram(lam, ctx))
    out.append(CheckReport(f"conj agrees with the diagram rule {ctx}", bool((diag == bar).all())))
    compat = all((bar[powers[r]] == powers[(n - r) % n][bar]).all() for r in range(n))
    out.append(CheckReport(f"conj(sigma_k^r A) = sigma_k^(n-r) conj(A) {ctx}", compat))

    # multiplication by phi(S_lam) is symmetric positive semidefinite in the Schubert basis
    psd_min, sym_ok, norm_ok, phi_ok = np.inf, True, True, True
    phis = []
    for i, lam in enumerate(ctx.basis):
        coeffs = C[i, bar[i]]  # phi(S_lam) in the basis
        phis.append(coeffs)
        L = np.einsum("d,dbe->eb", coeffs, C)
        sym_ok &= bool((L == L.T).all())
        psd_min = min(psd_min, float(np.linalg.eigvalsh(L.astype(float)).min()))
        support = np.nonzero(coeffs)[0]
        phi_ok &= bool(all(degree(ctx.basis[j]) % n == 0 for j in support)
                       and (coeffs[bar] == coeffs).all())
        norm_ok &= coeffs[unit] == 1
    out.append(CheckReport(f"phi(S) multiplication symmetric PSD {ctx}",
                           sym_ok and psd_min >= -1e-9, f"min eigenvalue {psd_min:.3e}"))
    out.append(CheckReport(f"phi maps Schubert classes into R_0 and R_inv {ctx}", phi_ok))
    phis = np.array(phis)
    sq = (C.astype(np.int64) ** 2).sum(axis=2)
    out.append(CheckReport(f"|S*S'|^2 = phi(S).phi(S') {ctx}", bool((sq == phis @ phis.T).all())
                           and norm_ok))
    return out


def gw_api_checks(ctx: BoxContext, samples: int = 200, seed: int = 0) -> list[CheckReport]:
    """Same identities through the public CohClass API on random Schubert triples."""
    rng = random.Random(seed)
    B = ctx.basis
    S = lambda lam: CohClass.schubert(ctx, lam)  # noqa: E731
    hat = lambda x: S(poincare_dual(_single(x), ctx))  # noqa: E731
    n = ctx.n
    fails = {"symmetry": 0, "duality": 0, "covariance": 0, "inversion": 0}
    for _ in range(samples):
        A, Bc, Cc = (S(rng.choice(B)) for _ in range(3))
        v = gw(A, Bc, Cc)
        if any(gw(*p) != v for p in permutations((A, Bc, Cc))):
            fails["symmetry"] += 1
        if gw(hat(A), hat(Bc), conj(Cc)) != v:
            fails["duality"] += 1
        s, t = rng.randrange(n), rng.randrange(n)
        if gw(zn_shift(A, s), zn_shift(Bc, t), zn_shift(Cc, n - s - t)) != v:
            fails["covariance"] += 1
        if qprod(A, conj(Bc)).coefficient(_single(Cc)) != qprod(Cc, Bc).coefficient(_single(A)):
            fails["inversion"] += 1
    return [CheckReport(f"{name} via API {ctx}", cnt == 0, f"{cnt}/{samples} failures")
            for name, cnt in fails.items()]


def prop3_checks(ctx: BoxContext) -> list[CheckReport]:
    inv = [lam for lam in ctx.basis
           if degree(lam) % ctx.n == 0 and conjugate_diagram(lam, ctx) == lam]
    roundtrip = all(gs_from_invariant(embed(a, a, ctx), ctx) == a for a in ctx.gs_basis)
    images = {embed(a, a, ctx) for a in ctx.gs_basis}
    return [
        CheckReport(f"invariant degree-0 classes counted by G_S {ctx}", len(inv) == ctx.gs_dim,
                    f"{len(inv)} vs {ctx.gs_dim}"),
        CheckReport(f"alpha -> embed(alpha, alpha) is a bijection onto them {ctx}",
                    roundtrip and images == set(inv)),
    ]


def sigma_k_eigenvalue_checks(ctx: BoxContext, root: RootChoice = RootChoice(),
                 tol: float = TOL_IDENTITY) -> list[CheckReport]:
    xi = root.validate(ctx).xi(ctx)
    dev = max(abs(sigma_k_value(lam, ctx, root) - xi ** (degree(lam) % ctx.n))
              for lam in ctx.basis)
    M = character_matrix(ctx, root).entries
    p1 = M[:, 0]
    pos = bool((p1.real > tol).all() and (np.abs(p1.imag) < tol).all())
    return [
        CheckReport(f"sigma_k(P_lam) = xi^|lam| {ctx}", dev < tol, f"max deviation {dev:.3e}"),
        CheckReport(f"S_lam(P_1) real and positive {ctx}", pos),
    ]


def spectral_oracle_check(ctx: BoxContext, root: RootChoice = RootChoice(),
                          tol: float = TOL_INTEGER) -> CheckReport:
    Cs = spectral_structure_constants(ctx, root)
    R = np.rint(Cs.real)
    dev = float(np.max(np.abs(Cs - R)))
    C = structure_tensor(ctx)
    agree = bool((R.astype(np.int64) == C).all())
    return CheckReport(f"spectral oracle = rim-hook product {ctx}", agree and dev < tol,
                       f"max deviation from integers {dev:.3e}", {"max_deviation": dev})


def spectrum_checks(ctx: BoxContext, root: RootChoice = RootChoice(),
                    tol: float = TOL_IDENTITY, tol_int: float = TOL_INTEGER) -> list[CheckReport]:
    out = [double_specialization_check(ctx, root, tol)]
    out += sigma_k_eigenvalue_checks(ctx, root, tol)
    out.append(orbit_count_check(ctx))
    out.append(spectral_oracle_check(ctx, root, tol_int))
    pts = all_points(ctx, root)
    res = max(ring_relation_residual(p) for p in pts)
    out.append(CheckReport(f"points satisfy the ring relations {ctx}", res < tol_int,
                           f"max residual {res:.3e}"))
    try:
        for p in pts:
            for s in range(ctx.n + 1):
                xi_action_on_points(p, s)
        ok, detail = True, ""
    except ValueError as exc:
        ok, detail = False, str(exc)
    out.append(CheckReport(f"Xi action preserves Spec R {ctx}", ok, detail))
    M = character_matrix(ctx, root).entries
    jt = max(abs(_jt(lam, p, ctx) - M[ctx.index[lam], j])
             for j, p in enumerate(pts) for lam in ctx.basis)
    out.append(CheckReport(f"bialternant = Jacobi-Trudi in sigma coordinates {ctx}", jt < tol_int,
                           f"max deviation {jt:.3e}"))
    return out


def _jt(lam, p, ctx):
    from .spectrum import jacobi_trudi_value

    return jacobi_trudi_value(lam, p.coords, ctx.k)


def coefficient_sum_checks(ctx: BoxContext | None = None, max_size: int = 6) -> list[CheckReport]:
    """Coefficient-sum identity, unbounded and inside G_S."""
    parts = [p for s in range(max_size + 1) for p in partitions_of(s)]
    bad = [(a, b) for i, a in enumerate(parts) for b in parts[i:]
           if lr_sum_lhs(a, b) != lr_sum_rhs(a, b)]
    out = [CheckReport(f"LR coefficient sums, sizes <= {max_size}", not bad,
                       f"{len(parts)} partitions, {len(bad)} failing pairs")]
    if ctx is not None:
        gs = ctx.gs_basis
        bad_gs = []
        for a in gs:
            for b in gs:
                sp = sum_pairing(CohClass.schubert(ctx, a), CohClass.schubert(ctx, b))
                if not sp == lr_sum_lhs(a, b) == lr_sum_rhs(a, b):
                    bad_gs.append((a, b))
        out.append(CheckReport(f"sum pairing on G_S = LR sums {ctx}", not bad_gs,
                               f"{len(bad_gs)} failing pairs"))
        # inside G_S the quantum product needs no reduction
        cut = [(a, b) for a in gs for b in gs
               if qprod(CohClass.schubert(ctx, a), CohClass.schubert(ctx, b))
               != CohClass(ctx, schur_product(a, b))]
        out.append(CheckReport(f"quantum = unbounded product on G_S {ctx}", not cut))
    return out


def conjugate_product_checks(ctx: BoxContext) -> list[CheckReport]:
    gs = ctx.gs_basis
    reps = [conjugate_product_check(a, b, ctx) for a in gs for b in gs]
    bad = [r.name for r in reps if not r.passed]
    return [CheckReport(f"conj(S_lam)*S_mu = A_lam A_mu^T on G_S {ctx}", not bad,
                        f"{len(reps)} pairs, {len(bad)} failing")]


def annihilator_checks(ctx: BoxContext) -> list[CheckReport]:
    out = [annihilator_check(ctx), ideal_comparison_check(ctx), numerical_equivalence_check(ctx),
           spectrum_consistency_check(ctx)]
    # endpoints of the chain in the proof: <sigma_i, P, S> = <conj(sigma_i), P, S>
    P = CohClass(ctx, {lam: 1 for lam in ctx.basis})
    bad = 0
    for i in range(ctx.k + 1):
        s = CohClass.sigma(ctx, i)
        for lam in ctx.basis:
            S = CohClass.schubert(ctx, lam)
            if gw(s, P, S) != gw(conj(s), P, S):
                bad += 1
    out.append(CheckReport(f"<sigma_i,P,S> = <conj(sigma_i),P,S> {ctx}", bad == 0,
                           f"{bad} failures"))
    return out


def symmetry_checks(ctx: BoxContext, samples: int | None = None, seed: int = 0) -> list[CheckReport]:
    out = quantum_checks(ctx, samples, seed)
    if samples is not None or ctx.dim > EXHAUSTIVE_LIMIT:
        out += gw_api_checks(ctx, samples or 200, seed)
    out += prop3_checks(ctx)
    out += psi_checks(ctx)
    return out


SUITES = {
    "t1": lambda ctx, **kw: annihilator_checks(ctx),
    "f3": lambda ctx, **kw: conjugate_product_checks(ctx),
    "plr": lambda ctx, **kw: coefficient_sum_checks(ctx, kw.get("max_size", 5)),
    "spectrum": lambda ctx, **kw: spectrum_checks(ctx, kw.get("root", RootChoice()),
                                                  kw.get("tol", TOL_IDENTITY),
                                                  kw.get("tol_int", TOL_INTEGER)),
    "symmetries": lambda ctx, **kw: symmetry_checks(ctx, kw.get("samples"), kw.get("seed", 0)),
}


def run_suite(name: str, ctx: BoxContext, **kw) -> list[CheckReport]:
    if name == "all":
        return [r for key in SUITES for r in SUITES[key](ctx, **kw)]
    return SUITES[name](ctx, **kw)
