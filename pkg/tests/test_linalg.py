from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from anosov import linalg

from oracles import scalar_det

matrices = st.integers(min_value=1, max_value=5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=n, max_size=n))


@settings(max_examples=80, deadline=None)
@given(matrices)
def test_bareiss_matches_laplace(rows):
    assert linalg.det(linalg.matrix(rows)) == scalar_det(rows)


@settings(max_examples=60, deadline=None)
@given(matrices)
def test_inverse(rows):
    M = linalg.matrix(rows)
    if scalar_det(rows) == 0:
        with pytest.raises(linalg.SingularMatrixError):
            linalg.inverse(M)
    else:
        assert linalg.matmul(M, linalg.inverse(M)) == linalg.identity(len(rows))


def test_rational_det():
    M = linalg.matrix([["1/2", "1/3"], ["1/4", "1/5"]])
    assert linalg.det(M) == Fraction(1, 10) - Fraction(1, 12)


def test_matpow_negative():
    B = linalg.matrix([[2, 3], [1, 2]])
    assert linalg.matpow(B, -1) == linalg.matrix([[2, -3], [-1, 2]])
    assert linalg.matmul(linalg.matpow(B, 3), linalg.matpow(B, -3)) == linalg.identity(2)


def test_nullspace_and_rank():
    M = linalg.matrix([[1, 2, 3], [2, 4, 6]])
    ns = linalg.nullspace(M)
    assert len(ns) == 2
    for v in ns:
        assert linalg.matvec(M, v) == (0, 0)
    assert linalg.rank(M) == 1


def test_in_span():
    rows = [[1, 0, 1], [0, 1, 1]]
    assert linalg.in_span([1, 1, 2], rows)
    assert not linalg.in_span([0, 0, 1], rows)


def test_ragged_rejected():
    with pytest.raises(ValueError):
        linalg.matrix([[1, 2], [3]])


def test_float_rejected():
    with pytest.raises(TypeError):
        linalg.as_fraction(0.5)
