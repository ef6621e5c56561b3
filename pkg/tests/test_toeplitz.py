from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from monolef import oracles
from monolef.toeplitz import (
    banded_binomial,
    reorder_to_toeplitz_bases,
    toeplitz_invertible,
    toeplitz_matrix,
    two_var_cross_oracle,
    two_variable_ideal,
    two_variable_matrix,
)


def boxed_plane_partitions(a, b, c):
    """MacMahon's count of plane partitions inside an a x b x c box."""
    total = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                total *= Fraction(i + j + k - 1, i + j + k - 2)
    return int(total)


def test_small_examples():
    assert toeplitz_matrix(2, 2, 1) == [[2, 1], [1, 2]]
    assert toeplitz_invertible(2, 2, 1) == (True, 3)
    assert toeplitz_matrix(3, 3, 1) == [[3, 3, 1], [1, 3, 3], [0, 1, 3]]


def test_k_zero_is_unitriangular():
    for n in range(1, 6):
        for m in range(1, 6):
            assert toeplitz_invertible(n, m, 0) == (True, 1)


def test_verbatim_convention_drops_the_constant_term():
    assert banded_binomial(3, 0) == 1
    assert banded_binomial(3, 0, "verbatim") == 0
    assert toeplitz_matrix(1, 1, 0, "verbatim") == [[0]]
    assert toeplitz_invertible(1, 1, 0, "verbatim") == (False, 0)
    assert two_var_cross_oracle(1, 1, 0)
    assert not two_var_cross_oracle(1, 1, 0, "verbatim")
    with pytest.raises(ValueError):
        banded_binomial(3, 1, "other")


def test_argument_errors():
    with pytest.raises(ValueError):
        toeplitz_matrix(2, 0, 1)
    with pytest.raises(ValueError):
        two_var_cross_oracle(2, 2, 3)


def test_two_variable_realisation():
    assert two_variable_ideal(2, 2, 1) == [(3, 0), (0, 3)]
    M = two_variable_matrix(3, 3, 1)
    T = toeplitz_matrix(3, 3, 1)
    # graded-lex order gives the transpose; reversing both bases gives T
    assert M == [list(r) for r in zip(*T)] != T
    assert reorder_to_toeplitz_bases(M) == T


def test_sweep_matches_box_formula_and_oracle():
    for n in range(1, 9):
        for m in range(1, 9):
            for k in range(0, n + 1):
                ok, det = toeplitz_invertible(n, m, k)
                assert ok and det == boxed_plane_partitions(m, k, n - k)
                assert two_var_cross_oracle(n, m, k)


@given(st.integers(1, 6), st.integers(1, 5), st.data())
def test_persymmetric_and_cofactor(n, m, data):
    k = data.draw(st.integers(0, n))
    T = toeplitz_matrix(n, m, k)
    assert all(T[i][j] == T[m - 1 - j][m - 1 - i] for i in range(m) for j in range(m))
    assert toeplitz_invertible(n, m, k)[1] == oracles.cofactor_determinant(T)
