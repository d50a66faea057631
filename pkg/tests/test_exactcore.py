from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gl3ortho.errors import DuplicateNode, InconsistentSystem, SingularSystem
from gl3ortho.exactcore import (
    H_NAMES,
    Poly,
    RationalMatrix,
    cofactor_det,
    det_and_rank,
    format_rational,
    lagrange_interpolate,
    nullspace,
    parse_rational,
    poly1,
    poly2,
    poly_eval,
    solve_linear,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


# --- poly_eval ---------------------------------------------------------------


def test_eval_identity_polynomial():
    assert poly_eval(poly1([0, 1]), 5) == 5


def test_eval_zero_polynomial():
    assert poly_eval(poly1([]), Fraction(7, 3)) == 0
    assert poly_eval(poly2({}), (1, 2)) == 0


def test_eval_two_variables():
    p = poly2({(1, 1): 1, (0, 0): 1})
    assert poly_eval(p, (2, 3)) == 7


# --- lagrange_interpolate ----------------------------------------------------


def test_interpolate_line():
    assert lagrange_interpolate([(0, 0), (1, 1)]) == poly1([0, 1])


def test_interpolate_constant():
    assert lagrange_interpolate([(0, 1), (1, 1), (2, 1)]) == poly1([1])


def test_interpolate_square_checked_at_fourth_point():
    p = lagrange_interpolate([(0, 0), (1, 1), (2, 4)])
    assert p == poly1([0, 0, 1])
    assert p.eval(3) == 9


def test_interpolate_duplicate_node():
    with pytest.raises(DuplicateNode):
        lagrange_interpolate([(1, 2), (1, 3)])


@settings(max_examples=60, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=6, unique=True), st.data())
def test_interpolant_reproduces_samples(xs, data):
    ys = data.draw(st.lists(rationals, min_size=len(xs), max_size=len(xs)))
    p = lagrange_interpolate(list(zip(xs, ys)))
    assert p.degree() < len(xs)
    assert all(p.eval(x) == y for x, y in zip(xs, ys))


@settings(max_examples=40, deadline=None)
@given(st.lists(rationals, min_size=1, max_size=5))
def test_interpolation_recovers_polynomial(coeffs):
    p = poly1(coeffs)
    samples = [(x, p.eval(x)) for x in range(len(coeffs))]
    assert lagrange_interpolate(samples) == p


# --- rationals ---------------------------------------------------------------


@given(rationals)
def test_rational_string_round_trip(q):
    assert parse_rational(format_rational(q)) == q


def test_format_integer_has_no_denominator():
    assert format_rational(Fraction(6, 3)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"


# --- Poly arithmetic ---------------------------------------------------------


polys2 = st.dictionaries(
    st.tuples(st.integers(0, 3), st.integers(0, 3)), rationals, max_size=5
).map(poly2)


@settings(max_examples=50, deadline=None)
@given(polys2, polys2, st.tuples(rationals, rationals))
def test_poly_ring_homomorphism(p, q, point):
    assert (p * q).eval(point) == p.eval(point) * q.eval(point)
    assert (p + q).eval(point) == p.eval(point) + q.eval(point)


@settings(max_examples=50, deadline=None)
@given(polys2, st.tuples(st.integers(-3, 3), st.integers(-3, 3)), st.tuples(rationals, rationals))
def test_shift_is_translation(p, offset, point):
    moved = (point[0] + offset[0], point[1] + offset[1])
    assert p.shift(offset).eval(point) == p.eval(moved)


def test_substitute_composes():
    h1, h2 = Poly.var(0, H_NAMES), Poly.var(1, H_NAMES)
    p = h1 * h2 + 1
    assert p.substitute([h1 + h2, h2]) == h1 * h2 + h2 * h2 + 1


# --- det_and_rank ------------------------------------------------------------


def test_det_identity():
    assert det_and_rank([[1, 0], [0, 1]]) == (1, 2)


def test_det_all_ones():
    assert det_and_rank([[1, 1], [1, 1]]) == (0, 1)


def test_det_three_by_three():
    m = [[1, 2, 3], [4, 5, 6], [7, 8, 10]]
    assert det_and_rank(m) == (-3, 3)
    assert cofactor_det(m) == -3


def test_det_non_square_is_zero():
    assert det_and_rank([[1, 2, 3], [4, 5, 6]]) == (0, 2)


def test_det_accepts_sparse_matrix():
    m = RationalMatrix.from_entries(2, 2, [(0, 0, Fraction(1, 2)), (1, 1, 3)])
    assert det_and_rank(m) == (Fraction(3, 2), 2)


small_square = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=n, max_size=n)
)


@settings(max_examples=150, deadline=None)
@given(small_square)
def test_bareiss_matches_cofactor(m):
    assert det_and_rank(m)[0] == cofactor_det(m)


@settings(max_examples=60, deadline=None)
@given(small_square, st.integers(1, 5))
def test_det_scales_with_fraction_rows(m, d):
    scaled = [[Fraction(v, d) for v in row] for row in m]
    assert det_and_rank(scaled)[0] == cofactor_det(m) / Fraction(d) ** len(m)


@settings(max_examples=60, deadline=None)
@given(small_square)
def test_rank_nullity(m):
    _, r = det_and_rank(m)
    kernel = nullspace(m)
    assert r + len(kernel) == len(m)
    for v in kernel:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)


# --- solve_linear ------------------------------------------------------------


def test_solve_overdetermined_consistent():
    assert solve_linear([[1, 0], [0, 1], [1, 1]], [2, 3, 5]) == [2, 3]


def test_solve_inconsistent():
    with pytest.raises(InconsistentSystem):
        solve_linear([[1, 0], [0, 1], [1, 1]], [2, 3, 6])


def test_solve_singular():
    with pytest.raises(SingularSystem):
        solve_linear([[1, 1], [2, 2]], [1, 2])


# --- sparse matrices ---------------------------------------------------------


def test_matrix_product_and_trace():
    a = RationalMatrix.from_entries(2, 2, [(0, 1, 1)])
    b = RationalMatrix.from_entries(2, 2, [(1, 0, 1)])
    assert (a @ b).trace() == 1
    assert a.commutator(b) == RationalMatrix.from_entries(2, 2, [(0, 0, 1), (1, 1, -1)])
