from collections import Counter
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gl3ortho.errors import InvalidHighestWeight, UnsupportedAlpha
from gl3ortho.gl3rep import (
    GTDiagram,
    basis_vector,
    build_gt_model,
    build_symmetric_model,
    check_commutation,
    enumerate_gt_diagrams,
    gl2_highest_subspace,
    gt_dim,
    monomial_basis,
    vacuum_vectors,
    weight_check,
)
from gl3ortho.quotient import EnvelopeElement, normalized_trace, realize, words_up_to

dominant = st.tuples(st.integers(-2, 4), st.integers(0, 3), st.integers(0, 3)).map(
    lambda t: (t[0] + t[1] + t[2], t[0] + t[2], t[0])
)


def vec(rep, label):
    return basis_vector(rep, label)


# --- symmetric model ---------------------------------------------------------


def test_symmetric_dimension():
    assert build_symmetric_model(2).dim == 6


def test_e12_on_linear_forms():
    rep = build_symmetric_model(1)
    e12 = rep[(1, 2)]
    assert e12.apply(vec(rep, (0, 1, 0))) == vec(rep, (1, 0, 0))
    assert e12.apply(vec(rep, (1, 0, 0))) == {}
    assert e12.apply(vec(rep, (0, 0, 1))) == {}


def test_e12_product_rule():
    rep = build_symmetric_model(2)
    img = rep[(1, 2)].apply(vec(rep, (0, 2, 0)))
    assert img == {rep.index((1, 1, 0)): 2}


def test_basis_is_descending_lex():
    basis = monomial_basis(3)
    assert basis == sorted(basis, reverse=True)
    assert len(basis) == comb(5, 2)


@pytest.mark.parametrize("alpha", [-1, Fraction(1, 2), 1.0])
def test_bad_alpha(alpha):
    with pytest.raises(UnsupportedAlpha):
        build_symmetric_model(alpha)


# --- GT diagrams -------------------------------------------------------------


def test_gt_counts():
    assert len(enumerate_gt_diagrams((1, 0, 0))) == 3
    assert enumerate_gt_diagrams((0, 0, 0)) == [GTDiagram(0, 0, 0, 0, 0, 0)]
    assert len(enumerate_gt_diagrams((2, 0, 0))) == 6


def test_gt_order_is_deterministic():
    ds = enumerate_gt_diagrams((2, 1, 0))
    keys = [(d.l21, d.l22, d.l11) for d in ds]
    assert keys == sorted(keys)


def test_non_dominant_rejected():
    with pytest.raises(InvalidHighestWeight):
        enumerate_gt_diagrams((0, 1, 0))


@settings(max_examples=30, deadline=None)
@given(dominant)
def test_gt_enumeration_matches_weyl_dimension(lam):
    ds = enumerate_gt_diagrams(lam)
    assert len(ds) == gt_dim(lam)
    assert all(d.is_valid() for d in ds)


def test_gt_e11_diagonal():
    rep = build_gt_model((3, 1, 0))
    for d in rep.labels:
        assert rep[(1, 1)].apply(vec(rep, d)) == ({rep.index(d): d.l11} if d.l11 else {})


def test_gt_e21_lowers_l11():
    rep = build_gt_model((3, 1, 0))
    for d in rep.labels:
        lower = d.shifted("l11", -1)
        want = vec(rep, lower) if lower.is_valid() else {}
        assert rep[(2, 1)].apply(vec(rep, d)) == want


def test_gt_e12_kills_exactly_l11_equal_l21():
    rep = build_gt_model((3, 1, 0))
    for d in rep.labels:
        killed = not rep[(1, 2)].apply(vec(rep, d))
        assert killed == (d.l11 == d.l21)


# --- commutation and weights -------------------------------------------------


def test_commutators_symmetric():
    assert check_commutation(build_symmetric_model(3))["pass"]


@pytest.mark.parametrize("lam", [(2, 1, 0), (5, 2, -1)])
def test_commutators_gt(lam):
    report = check_commutation(build_gt_model(lam))
    assert report["pass"], report["failures"]


@settings(max_examples=15, deadline=None)
@given(dominant)
def test_commutators_gt_property(lam):
    rep = build_gt_model(lam)
    assert check_commutation(rep)["pass"]
    assert not weight_check(rep)


@pytest.mark.parametrize("alpha", range(9))
def test_models_agree_on_dimension_and_weights(alpha):
    sym = build_symmetric_model(alpha)
    gt = build_gt_model((alpha, 0, 0))
    assert sym.dim == gt.dim == comb(alpha + 2, 2)
    assert Counter(sym.weights) == Counter(gt.weights)


@pytest.mark.parametrize("alpha", [0, 1, 2, 3])
def test_models_agree_on_word_traces(alpha):
    sym = build_symmetric_model(alpha)
    gt = build_gt_model((alpha, 0, 0))
    for w in words_up_to(3):
        e = EnvelopeElement.word(*w)
        assert normalized_trace(realize(e, sym)) == normalized_trace(realize(e, gt)), w


# --- highest vectors ---------------------------------------------------------


def test_vacuum_symmetric():
    rep = build_symmetric_model(4)
    (v,) = vacuum_vectors(rep)
    assert set(v) == {rep.index((4, 0, 0))}


def test_vacuum_gt_and_trivial():
    assert len(vacuum_vectors(build_gt_model((3, 1, 0)))) == 1
    assert len(vacuum_vectors(build_gt_model((0, 0, 0)))) == 1


def test_gl2_highest_symmetric():
    rep = build_symmetric_model(2)
    space = gl2_highest_subspace(rep)
    support = {i for v in space for i in v}
    assert len(space) == 3
    assert support == {rep.index(k) for k in ((2, 0, 0), (1, 0, 1), (0, 0, 2))}


def test_gl2_highest_gt():
    rep = build_gt_model((3, 1, 0))
    space = gl2_highest_subspace(rep)
    want = {rep.index(d) for d in rep.labels if d.l11 == d.l21}
    assert len(space) == len(want)
    assert {i for v in space for i in v} == want


def test_gl2_highest_trivial():
    assert len(gl2_highest_subspace(build_gt_model((0, 0, 0)))) == 1
