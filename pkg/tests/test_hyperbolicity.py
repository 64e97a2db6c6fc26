import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anosov import linalg
from anosov.algebra import LieAlgebra
from anosov.catalog import DEFAULT_A3, exterior_square
from anosov.doubling import b_matrix
from anosov.hyperbolicity import (
    NotIntegralError,
    certify,
    char_poly,
    classify_splitting,
    pair_transform,
    rational_char_poly,
    unimodularity_check,
    unit_circle_root_test,
)
from anosov.polynomial import IntPolynomial

from oracles import cofactor_char_poly, numeric_splitting, numeric_unit_circle

P = IntPolynomial


def h3():
    return LieAlgebra.from_table(3, [(1, 2, 3, 1)], (1, 1, 2), "h3")


# -- characteristic polynomial ------------------------------------------------

@pytest.mark.parametrize("a", [2, 3, 5, 10])
def test_char_poly_of_b(a):
    assert char_poly(b_matrix(a)) == P([1, -2 * a, 1])


def test_char_poly_identity():
    assert char_poly(linalg.identity(2)) == P([1, -2, 1])


def test_char_poly_default_a3_against_cofactor_oracle():
    oracle = cofactor_char_poly(DEFAULT_A3)
    assert oracle == [-1, 5, -6, 1]
    assert char_poly(DEFAULT_A3) == P([-1, 5, -6, 1])


def test_char_poly_wedge_square_against_cofactor_oracle():
    W = exterior_square(DEFAULT_A3)
    oracle = cofactor_char_poly(W)
    assert oracle == [-1, 6, -5, 1]
    assert char_poly(W) == P(oracle)


square = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=60, deadline=None)
@given(square)
def test_faddeev_leverrier_matches_cofactor(rows):
    assert list(rational_char_poly(rows)) == cofactor_char_poly(rows)


def test_rational_char_poly_and_non_integral():
    M = linalg.matrix([["1/2", 0], [0, 3]])
    assert rational_char_poly(M) == (Fraction(3, 2), Fraction(-7, 2), 1)
    with pytest.raises(NotIntegralError):
        char_poly(M)


@settings(max_examples=30, deadline=None)
@given(square, square)
def test_char_poly_block_diagonal_is_product(a, b):
    whole = char_poly(linalg.block_diag([linalg.matrix(a), linalg.matrix(b)]))
    assert whole == char_poly(a) * char_poly(b)


# -- unimodularity ------------------------------------------------------------

def test_unimodularity_examples():
    assert unimodularity_check(P([1, -4, 1]))
    assert not unimodularity_check(P([0, -3, 1]))
    assert unimodularity_check(P([-1, 5, -6, 1]))


def test_unimodularity_rejects_non_monic():
    with pytest.raises(ValueError):
        unimodularity_check(P([1, 0, 2]))


# -- pair transform -----------------------------------------------------------

def test_pair_transform_golden_ratio_square():
    r = pair_transform(P([1, -3, 1]))
    assert r(3) == 0


def test_pair_transform_i():
    assert pair_transform(P([1, 0, 1]))(0) == 0


def test_pair_transform_linear():
    assert pair_transform(P([-2, 1]))(Fraction(5, 2)) == 0


@pytest.mark.parametrize("roots", [[2, 3], [-1, 4, 5], [2, 2, -3], [1, -7]])
def test_pair_transform_vanishes_at_rational_roots(roots):
    p = P.from_roots(roots)
    r = pair_transform(p)
    assert r.degree == p.degree
    for mu in roots:
        assert r(Fraction(mu) + Fraction(1, mu)) == 0


def test_pair_transform_needs_nonzero_constant():
    with pytest.raises(ValueError):
        pair_transform(P([0, 1, 1]))


# -- unit circle test ---------------------------------------------------------

def test_unit_circle_examples():
    assert not unit_circle_root_test(P([1, -4, 1]))
    res = unit_circle_root_test(P([1, 0, 1]))
    assert res.has_root and res.trace_interval[0] <= 0 <= res.trace_interval[1]
    both = P([1, -3, 1]) * P([1, -1, 1])
    res = unit_circle_root_test(both)
    # roots e^{+-i pi/3}: 2 cos(pi/3) = 1
    assert res.has_root and res.trace_interval[0] <= 1 <= res.trace_interval[1]
    assert not unit_circle_root_test(P([-1, 5, -6, 1]))


def test_unit_circle_plus_minus_one():
    assert unit_circle_root_test(P([-1, 1])).exact_root == 1
    assert unit_circle_root_test(P([1, 1])).exact_root == -1


def test_unit_circle_zero_constant_rejected():
    with pytest.raises(ValueError):
        unit_circle_root_test(P([0, -3, 1]))


def test_lehmer_polynomial_has_circle_roots():
    # Lehmer's polynomial has two real roots off the circle and eight on it
    lehmer = P([1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
    assert unit_circle_root_test(lehmer)


monic = st.integers(1, 6).flatmap(
    lambda d: st.tuples(st.integers(-9, 9).filter(bool), st.lists(st.integers(-9, 9), min_size=d - 1, max_size=d - 1))
).map(lambda t: P([t[0], *t[1], 1]))


@settings(max_examples=200, deadline=None)
@given(monic)
def test_unit_circle_agrees_with_numeric_oracle(p):
    expected = numeric_unit_circle(p.coeffs)
    if expected is None:
        return
    assert bool(unit_circle_root_test(p)) == expected


@settings(max_examples=100, deadline=None)
@given(monic)
def test_reverse_polynomial_symmetry(p):
    rev = p.reverse()
    assert bool(unit_circle_root_test(p)) == bool(unit_circle_root_test(rev))
    if not unit_circle_root_test(p):
        s, t = classify_splitting(p), classify_splitting(rev)
        assert (s.expanding, s.contracting) == (t.contracting, t.expanding)


# -- splitting ----------------------------------------------------------------

def test_splitting_examples():
    s = classify_splitting(P([1, -4, 1]))
    assert (s.expanding, s.contracting, s.mode) == (1, 1, "exact")
    B = b_matrix(2)
    M = linalg.block_diag([B, B, linalg.matmul(B, B)])
    s = classify_splitting(char_poly(M))
    assert (s.expanding, s.contracting, s.mode) == (3, 3, "exact")


def test_splitting_default_a3():
    # roots ~ 5.049, 0.643, 0.308: one expanding, two contracting
    assert numeric_splitting([-1, 5, -6, 1]) == (1, 2)
    s = classify_splitting(P([-1, 5, -6, 1]))
    assert (s.expanding, s.contracting, s.mode) == (1, 2, "exact")


def test_splitting_numeric_fallback_for_complex_spectrum():
    # x^2 + 3x + 9 has a complex pair of modulus 3
    p = P([1, -3, 1]) * P([9, 3, 1])
    s = classify_splitting(p)
    assert s.mode == "numeric-fallback"
    assert (s.expanding, s.contracting) == numeric_splitting(p.coeffs) == (3, 1)


def test_splitting_requires_off_circle():
    with pytest.raises(ValueError):
        classify_splitting(P([1, 0, 1]))


def test_reciprocal_products_split_evenly():
    rng = random.Random(7)
    checked = 0
    for _ in range(200):
        roots = [rng.choice([-1, 1]) * rng.randint(2, 9) for _ in range(rng.randint(1, 4))]
        # integer roots times their reciprocals' polynomial: all real, off circle
        p = P.from_roots(roots)
        p = p * p.reverse()
        s = classify_splitting(p)
        assert s.mode == "exact"
        assert (s.expanding, s.contracting) == (len(roots), len(roots))
        checked += 1
    assert checked == 200


# -- certify ------------------------------------------------------------------

def test_certify_identity_not_hyperbolic():
    cert = certify(h3(), linalg.identity(3))
    assert cert.automorphism and cert.integral and cert.unimodular
    assert not cert.hyperbolic and not cert.anosov
    assert cert.failure_witnesses[-1]["eigenvalue"] == "1"


def test_certify_grading_automorphism_not_unimodular():
    cert = certify(h3(), linalg.diagonal([Fraction(2), Fraction(2), Fraction(4)]))
    assert cert.automorphism and cert.integral and cert.hyperbolic
    assert not cert.unimodular and not cert.anosov
    # char poly (x-2)^2 (x-4): constant term -16
    assert cert.char_poly == tuple(Fraction(c) for c in cofactor_char_poly([[2, 0, 0], [0, 2, 0], [0, 0, 4]]))
    assert cert.char_poly[0] == -16


def test_certify_non_automorphism():
    cert = certify(h3(), linalg.diagonal([Fraction(1), Fraction(1), Fraction(2)]))
    assert not cert.automorphism
    w = cert.failure_witnesses[0]
    assert (w["i"], w["j"], w["residual"]) == (1, 2, ["0", "0", "1"])


def test_certify_singular_matrix():
    cert = certify(h3(), linalg.diagonal([Fraction(0), Fraction(2), Fraction(0)]))
    assert not cert.automorphism and not cert.unimodular and not cert.anosov


def test_certify_non_integral_matrix():
    cert = certify(h3(), linalg.diagonal([Fraction(1, 2), Fraction(4), Fraction(2)]))
    assert cert.automorphism and not cert.integral and not cert.anosov


def test_certify_shape_mismatch():
    with pytest.raises(ValueError):
        certify(h3(), linalg.identity(2))
