from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from tenval.linalg import Matrix, as_rational, rank, rref

from conftest import invertible_matrices, small_rationals


def test_as_rational_accepts_exact_inputs():
    assert as_rational("3/6") == Fraction(1, 2)
    assert as_rational(-4) == Fraction(-4)
    assert as_rational(Fraction(2, 3)) == Fraction(2, 3)


@pytest.mark.parametrize("bad", [0.5, "0.5", "1e3", True])
def test_as_rational_rejects_floats(bad):
    with pytest.raises((TypeError, ValueError)):
        as_rational(bad)


def test_named_matrices_act_on_basis():
    e1, e2 = (1, 0), (0, 1)
    assert Matrix.upper_shear(3) @ e2 == (3, 1)
    assert Matrix.upper_shear(3) @ e1 == (1, 0)
    assert Matrix.lower_shear(3) @ e1 == (1, 3)
    assert Matrix.rho() @ e1 == (0, 1)
    assert Matrix.rho() @ e2 == (-1, 0)
    assert Matrix.rho().det() == 1


@given(invertible_matrices(3))
def test_inverse(phi):
    assert phi @ phi.inverse() == Matrix.identity(3)
    assert phi.inverse_transpose() == phi.T.inverse()


def test_singular_inverse_raises():
    with pytest.raises(ZeroDivisionError):
        Matrix([[1, 2], [2, 4]]).inverse()


@given(st.lists(st.lists(small_rationals, min_size=5, max_size=5), min_size=1, max_size=6))
def test_bareiss_rank_matches_rref(rows):
    _, pivots = rref(rows)
    assert rank(rows) == len(pivots)


def test_rank_with_skipped_columns():
    rows = [[0, 1, 2], [0, 2, 4], [0, 0, 1]]
    assert rank(rows) == 2
