from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qschubert.cohclass import CohClass, class_from_json, class_to_json, format_class
from qschubert.partitions import BoxContext, conjugate_diagram, degree, poincare_dual
from qschubert.quantum import (
    conj,
    degree_mod_n,
    gw,
    in_r0,
    in_rinv,
    phi,
    qprod,
    rim_hook_reduce,
    schubert_product,
    zn_shift,
)
from qschubert.verify import quantum_checks

from conftest import SMALL_CONTEXTS, contexts

G24, G25, G48 = BoxContext(2, 4), BoxContext(2, 5), BoxContext(4, 8)


def S(ctx, lam):
    return CohClass.schubert(ctx, lam)


# --- CohClass ---------------------------------------------------------------

def test_cohclass_arithmetic_and_format():
    a = S(G24, (2,)) + S(G24, (1, 1)) - 2 * CohClass.one(G24)
    assert format_class(a) == "-2*S[] + S[2] + S[1,1]"
    assert a.coefficient(()) == -2
    assert (a - a).is_zero()
    assert format_class(CohClass.zero(G24)) == "0"
    assert Fraction(1, 2) * S(G24, (1,)) == CohClass(G24, {(1,): Fraction(1, 2)})


def test_cohclass_rejects_bad_input():
    with pytest.raises(ValueError):
        S(G24, (3,))
    with pytest.raises(ValueError):
        S(G24, (1,)) + S(G25, (1,))


def test_sigma_and_point_class():
    assert CohClass.sigma(G24, 0) == CohClass.one(G24)
    assert CohClass.sigma(G24, 2) == S(G24, (2,))
    assert CohClass.point_class(G24) == S(G24, (2, 2))


@given(contexts(max_n=7), st.data())
def test_json_round_trip(ctx, data):
    support = data.draw(st.lists(st.sampled_from(ctx.basis), unique=True))
    coeffs = data.draw(st.lists(st.fractions(max_denominator=9), min_size=len(support),
                                max_size=len(support)))
    a = CohClass(ctx, dict(zip(support, coeffs)))
    doc = class_to_json(a)
    assert all("/" in t["coeff"] for t in doc["terms"])
    assert class_from_json(doc) == a


# --- rim hooks and products -------------------------------------------------

@pytest.mark.parametrize("nu,expected", [
    ((2, 1), (1, (2, 1))),  # already in the box
    ((3, 1), (1, ())),  # whole diagram is one 4-hook of height 2
    ((4,), (-1, ())),  # horizontal 4-hook
    ((4, 2), (1, (1, 1))),
    ((3, 3), (1, (2,))),
    ((4, 1), (0, None)),  # no removable 4-hook
])
def test_rim_hook_reduce_g24(nu, expected):
    assert rim_hook_reduce(nu, G24) == expected


@pytest.mark.parametrize("nu,expected", [((5,), (1, ())), ((4, 1), (-1, ())), ((3,), (0, None)),
                                         ((3, 3), (0, None))])
def test_rim_hook_reduce_g25(nu, expected):
    assert rim_hook_reduce(nu, G25) == expected


def test_g24_products():
    one = CohClass.one(G24)
    assert qprod(S(G24, (2, 1)), S(G24, (2, 1))) == S(G24, (2,)) + S(G24, (1, 1))
    assert qprod(S(G24, (1,)), S(G24, (2, 1))) == S(G24, (2, 2)) + one
    assert qprod(S(G24, (2, 2)), S(G24, (2, 2))) == one
    assert S(G24, (1,)) ** 4 == 2 * one + 2 * S(G24, (2, 2))


def test_sigma_k_power_is_identity():
    for ctx in SMALL_CONTEXTS:
        assert CohClass.sigma(ctx, ctx.k) ** ctx.n == CohClass.one(ctx)


@pytest.mark.parametrize("ctx", SMALL_CONTEXTS, ids=str)
def test_structure_constants_nonnegative_integers(ctx):
    for i, a in enumerate(ctx.basis):
        for b in ctx.basis[i:]:
            out = schubert_product(a, b, ctx)
            assert all(isinstance(c, int) and c > 0 for c in out.values())
            assert out == schubert_product(b, a, ctx)


def test_gw_examples():
    one, s1 = CohClass.one(G24), S(G24, (1,))
    assert gw(s1, s1, S(G24, (2,))) == 1
    assert gw(one, S(G24, (2, 1)), S(G24, (1,))) == 1
    assert gw(one, one, CohClass.point_class(G24)) == 1
    assert gw(one, one, one) == 0


def test_conj_examples():
    assert conj(S(G48, (2, 1))) == S(G48, (3, 1, 1))
    assert conj(S(G24, (1,))) == S(G24, (2, 1))
    assert conj(CohClass.one(G24)) == CohClass.one(G24)


@pytest.mark.parametrize("ctx", SMALL_CONTEXTS, ids=str)
def test_conj_matches_diagram_rule(ctx):
    for lam in ctx.basis:
        assert conj(S(ctx, lam)) == S(ctx, conjugate_diagram(lam, ctx))


def test_zn_shift_and_degrees():
    assert zn_shift(CohClass.one(G24), 1) == S(G24, (2,))
    assert zn_shift(S(G24, (1,)), 4) == S(G24, (1,))
    assert degree_mod_n(S(G24, (2, 1))) == 3
    assert degree_mod_n(S(G24, (1,)) + S(G24, (2,))) == "mixed"
    assert degree_mod_n(CohClass.zero(G24)) == 0
    assert in_r0(CohClass.one(G24) + S(G24, (2, 2)))


@given(contexts(max_n=8), st.data())
@settings(deadline=None, max_examples=40)
def test_phi_lands_in_invariant_degree_zero_part(ctx, data):
    lam = data.draw(st.sampled_from(ctx.basis))
    img = phi(S(ctx, lam))
    assert in_r0(img) and in_rinv(img)


@given(contexts(max_n=8), st.data())
@settings(deadline=None, max_examples=60)
def test_shift_rotates_degree(ctx, data):
    lam = data.draw(st.sampled_from(ctx.basis))
    r = data.draw(st.integers(0, 2 * ctx.n))
    shifted = zn_shift(S(ctx, lam), r)
    assert len(shifted.support()) == 1
    assert degree(shifted.support()[0]) % ctx.n == (degree(lam) + r * ctx.k) % ctx.n
    assert poincare_dual(poincare_dual(lam, ctx), ctx) == lam


@pytest.mark.parametrize("kn", [(1, 2), (2, 4), (2, 5), (3, 6), (1, 5), (3, 7)])
def test_exhaustive_quantum_identities(kn):
    ctx = BoxContext(*kn)
    failures = [r.line() for r in quantum_checks(ctx) if not r.passed]
    assert not failures
