from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from qschubert.partitions import BoxContext, degree
from qschubert.spectrum import (
    STANDARD_ROOTS,
    RootChoice,
    all_points,
    character_matrix,
    double_specialization_check,
    evaluate,
    index_tuple,
    jacobi_trudi_value,
    match_point,
    point,
    ring_relation_residual,
    sigma_k_value,
    spectral_structure_constants,
    xi_action_on_points,
)
from qschubert.verify import spectrum_checks, structure_tensor

from conftest import contexts

G24 = BoxContext(2, 4)


def test_index_tuple():
    assert index_tuple((), G24) == (Fraction(1, 2), Fraction(-1, 2))
    assert index_tuple((2, 1), G24) == (Fraction(5, 2), Fraction(1, 2))
    assert index_tuple((1,), BoxContext(2, 5)) == (Fraction(2), Fraction(0), Fraction(-1))


def test_root_choice_validation():
    assert RootChoice().validate(G24) == RootChoice(1, 1)
    assert RootChoice(3).validate(G24) == RootChoice(3, 3)
    assert RootChoice(1, 5).validate(G24) == RootChoice(1, 5)
    with pytest.raises(ValueError):
        RootChoice(2).validate(G24)
    with pytest.raises(ValueError):
        RootChoice(1, 2).validate(G24)
    # odd n: the odd representative is e + n
    assert RootChoice(2).validate(BoxContext(2, 5)) == RootChoice(2, 7)


def test_g24_points_values():
    p = point((1,), G24, STANDARD_ROOTS)
    assert abs(evaluate((), p) - 1) < 1e-12
    assert abs(evaluate((2,), p) - 1j) < 1e-12
    assert abs(evaluate((2, 2), p) + 1) < 1e-12
    assert abs(sigma_k_value((1,), G24) - 1j) < 1e-12
    with pytest.raises(ValueError):
        evaluate((3,), p)


def test_normalized_matrix_is_symmetric_for_g24():
    N = character_matrix(G24, STANDARD_ROOTS).normalized()
    assert np.allclose(N, N.T, atol=1e-12)


@given(contexts(max_n=9), st.data())
@settings(deadline=None, max_examples=40)
def test_sigma_k_is_xi_to_degree(ctx, data):
    e = data.draw(st.sampled_from([e for e in range(1, ctx.n) if np.gcd(e, ctx.n) == 1] or [1]))
    root = RootChoice(e)
    xi = root.validate(ctx).xi(ctx)
    lam = data.draw(st.sampled_from(ctx.basis))
    assert abs(sigma_k_value(lam, ctx, root) - xi ** degree(lam)) < 1e-9


@given(contexts(max_n=9), st.data())
@settings(deadline=None, max_examples=30)
def test_double_specialization_any_root(ctx, data):
    units = [e for e in range(1, ctx.n) if np.gcd(e, ctx.n) == 1] or [1]
    root = RootChoice(data.draw(st.sampled_from(units)))
    assert double_specialization_check(ctx, root).passed


@given(contexts(max_n=9), st.data())
@settings(deadline=None, max_examples=40)
def test_bialternant_matches_jacobi_trudi(ctx, data):
    lam = data.draw(st.sampled_from(ctx.basis))
    mu = data.draw(st.sampled_from(ctx.basis))
    p = point(mu, ctx)
    assert abs(evaluate(lam, p) - jacobi_trudi_value(lam, p.coords, ctx.k)) < 1e-8
    assert ring_relation_residual(p) < 1e-8


@pytest.mark.parametrize("kn", [(1, 3), (2, 4), (2, 5), (3, 6), (3, 7), (4, 8)])
def test_spectral_constants_equal_rim_hook_constants(kn):
    ctx = BoxContext(*kn)
    C = spectral_structure_constants(ctx)
    assert np.max(np.abs(C - structure_tensor(ctx))) < 1e-6


def test_points_are_distinct_and_matchable():
    ctx = BoxContext(3, 7)
    pts = all_points(ctx)
    for p in pts[:10]:
        assert match_point(p.coords, ctx) == p.label
    with pytest.raises(ValueError):
        match_point(np.full(ctx.k, 10.0), ctx)


def test_xi_action_permutes_points():
    ctx = BoxContext(2, 5)
    labels = {xi_action_on_points(p, 1).label for p in all_points(ctx)}
    assert labels == set(ctx.basis)
    p = point((1,), ctx)
    assert xi_action_on_points(p, ctx.n).label == (1,)


@pytest.mark.parametrize("kn", [(2, 4), (2, 5), (3, 6)])
def test_spectrum_suite(kn):
    failures = [r.line() for r in spectrum_checks(BoxContext(*kn)) if not r.passed]
    assert not failures
