from math import comb

import pytest
from hypothesis import given, strategies as st

from qschubert.partitions import (
    BoxContext,
    conjugate_diagram,
    degree,
    durfee,
    embed,
    enumerate_box,
    fits_box,
    format_partition,
    gs_from_invariant,
    in_gs,
    parse_partition,
    partition,
    poincare_dual,
    transpose,
)

from conftest import contexts

G24, G48, G612 = BoxContext(2, 4), BoxContext(4, 8), BoxContext(6, 12)


def test_partition_normalizes_trailing_zeros():
    assert partition([3, 1, 0, 0]) == (3, 1)
    with pytest.raises(ValueError):
        partition([1, 2])
    with pytest.raises(ValueError):
        partition([2, -1])


@pytest.mark.parametrize("k,n", [(0, 3), (3, 3), (4, 2)])
def test_context_rejects_bad_bounds(k, n):
    with pytest.raises(ValueError):
        BoxContext(k, n)


def test_fits_box():
    assert fits_box((2, 1), G24)
    assert not fits_box((3,), G24)
    assert fits_box((2, 2), G24)
    assert not fits_box((1, 1, 1), G24)


def test_enumerate_box_order():
    assert enumerate_box(G24) == [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]
    assert enumerate_box(BoxContext(1, 2)) == [(), (1,)]
    assert len(enumerate_box(BoxContext(3, 6))) == 20


@given(contexts())
def test_box_and_gs_sizes(ctx):
    assert len(ctx.basis) == comb(ctx.n, ctx.k) == ctx.dim
    assert len(ctx.gs_basis) == comb(ctx.l // 2 + ctx.k // 2, ctx.k // 2) == ctx.gs_dim
    assert len(set(ctx.basis)) == len(ctx.basis)


def test_durfee():
    assert durfee((2, 1)) == 1
    assert durfee(()) == 0
    assert durfee((3, 3, 2)) == 2
    assert durfee((5, 5, 5, 5, 1)) == 4


def test_poincare_dual_examples():
    assert poincare_dual((), G24) == (2, 2)
    assert poincare_dual((1, 1), G24) == (1, 1)
    assert poincare_dual((2, 1), G24) == (1,)
    with pytest.raises(ValueError):
        poincare_dual((3,), G24)


def test_conjugate_diagram_examples():
    assert conjugate_diagram((2, 1), G48) == (3, 1, 1)
    assert conjugate_diagram((), G48) == ()
    assert conjugate_diagram((2, 1), G24) == (1,)
    with pytest.raises(ValueError):
        conjugate_diagram((5,), G48)


def test_in_gs():
    assert in_gs((1,), G24)
    assert not in_gs((1, 1), G24)
    assert in_gs((2, 1), G48)
    assert in_gs((3,), G612)
    assert in_gs((3, 2, 1), G612)


def test_embed_examples():
    assert embed((2, 1), (1, 1), G48) == (3, 2, 2)
    assert embed((2, 2), (2, 1), G612) == (6, 6, 4, 3, 2, 2)
    assert embed((), (), G48) == ()
    with pytest.raises(ValueError):
        embed((3,), (), G48)


def test_gs_from_invariant_examples():
    assert embed((1,), (1,), G24) == (2, 2)
    assert gs_from_invariant((2, 2), G24) == (1,)
    assert gs_from_invariant((), G24) == ()
    with pytest.raises(ValueError):
        gs_from_invariant((3, 2, 2), G48)


@given(contexts(), st.data())
def test_conjugation_involution_and_degree(ctx, data):
    lam = data.draw(st.sampled_from(ctx.basis))
    bar = conjugate_diagram(lam, ctx)
    assert fits_box(bar, ctx)
    assert conjugate_diagram(bar, ctx) == lam
    assert degree(bar) == ctx.n * durfee(lam) - degree(lam)


@given(contexts(), st.data())
def test_poincare_dual_involution(ctx, data):
    lam = data.draw(st.sampled_from(ctx.basis))
    d = poincare_dual(lam, ctx)
    assert poincare_dual(d, ctx) == lam
    assert degree(d) == ctx.k * ctx.l - degree(lam)


@given(contexts())
def test_invariant_classes_are_self_embeddings(ctx):
    images = {}
    for a in ctx.gs_basis:
        nu = embed(a, a, ctx)
        assert conjugate_diagram(nu, ctx) == nu
        assert degree(nu) % ctx.n == 0
        assert gs_from_invariant(nu, ctx) == a
        images[nu] = a
    invariant = [lam for lam in ctx.basis
                 if degree(lam) % ctx.n == 0 and conjugate_diagram(lam, ctx) == lam]
    assert sorted(invariant) == sorted(images)


@given(contexts(), st.data())
def test_embed_lands_in_box(ctx, data):
    a = data.draw(st.sampled_from(ctx.gs_basis))
    b = data.draw(st.sampled_from(ctx.gs_basis))
    nu = embed(a, b, ctx)
    assert fits_box(nu, ctx)
    assert degree(nu) == degree(conjugate_diagram(a, ctx)) + degree(b)


def test_transpose():
    assert transpose((3, 1)) == (2, 1, 1)
    assert transpose(()) == ()


@pytest.mark.parametrize("text,value", [("[3,2,1]", (3, 2, 1)), ("[]", ()), ("2,1", (2, 1)),
                                        (" [ 1 ] ", (1,))])
def test_parse_partition(text, value):
    assert parse_partition(text) == value
    assert parse_partition(format_partition(value)) == value


@pytest.mark.parametrize("text", ["[1,2]", "[a]", "[1", "[-1]"])
def test_parse_partition_rejects(text):
    with pytest.raises(ValueError):
        parse_partition(text)
