from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from helpers import int_matrices
from monolef import linalg, oracles


def test_rank_examples():
    assert linalg.rank([[1, 2], [2, 4]]) == 1
    assert linalg.rank([[0, 0], [0, 0]]) == 0
    assert linalg.rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert linalg.rank([]) == 0


def test_determinant_examples():
    assert linalg.determinant([[2, 1], [1, 2]]) == 3
    assert linalg.determinant([[0, 1], [1, 0]]) == -1
    assert linalg.determinant([]) == 1
    with pytest.raises(ValueError):
        linalg.determinant([[1, 2, 3], [4, 5, 6]])


def test_large_entries_stay_exact():
    big = 10**30
    M = [[big, big + 1], [big - 1, big]]
    assert linalg.determinant(M) == big * big - (big + 1) * (big - 1) == 1


def test_nullspace_example():
    assert [v.primitive() for v in linalg.nullspace([[1, 1, 1]])] == [(1, -1, 0), (1, 0, -1)]
    basis = linalg.nullspace([[1, 2], [2, 4]])
    assert [b.primitive() for b in basis] == [(2, -1)]
    assert linalg.nullspace([], cols=2)[0].numerators == (1, 0)


def test_rational_vector_normalisation():
    v = linalg.RationalVector.from_fractions([Fraction(1, 2), Fraction(-1, 3)])
    assert v.numerators == (3, -2) and v.denominator == 6
    assert v.as_fractions() == [Fraction(1, 2), Fraction(-1, 3)]
    assert linalg.RationalVector((-4, 6)).primitive() == (2, -3)


@given(int_matrices())
def test_rank_of_transpose(M):
    assert linalg.rank(M) == linalg.rank(linalg.transpose(M))


@given(int_matrices())
def test_rank_matches_fraction_oracle(M):
    assert linalg.rank(M) == oracles.fraction_rank(M)


@given(int_matrices())
def test_rank_nullity(M):
    cols = len(M[0])
    basis = linalg.nullspace(M)
    assert linalg.rank(M) + len(basis) == cols
    for v in basis:
        assert not any(linalg.matvec(M, list(v.numerators)))


@given(st.integers(1, 5).flatmap(lambda n: st.lists(st.lists(st.integers(-5, 5), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_matches_cofactor_oracle(M):
    assert linalg.determinant(M) == oracles.cofactor_determinant(M) == oracles.permutation_determinant(M)


@given(st.integers(1, 8).flatmap(lambda n: st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=n, max_size=n)))
def test_determinant_nonzero_iff_full_rank(M):
    assert (linalg.determinant(M) != 0) == (oracles.fraction_rank(M) == len(M))


@given(int_matrices(max_rows=8, max_cols=8, lo=-3, hi=3))
def test_modular_certificate_agrees_with_exact_rank(M):
    r, full = linalg.maximal_rank(M)
    exact = linalg.rank(M)
    assert r == exact
    assert full == (exact == min(len(M), len(M[0])))
    assert linalg.rank_mod_p(linalg.to_modular(M)) <= exact


def test_modular_rank_can_drop_but_verdict_stays_exact():
    p = linalg.MODULUS
    M = [[p, 0], [0, 1]]
    assert linalg.rank_mod_p(linalg.to_modular(M)) == 1
    assert linalg.maximal_rank(M) == (2, True)


def test_matmul_mod_p_matches_exact():
    A = [[1, 2, 3], [4, 5, 6]]
    B = [[7, 8], [9, 10], [11, 12]]
    exact = linalg.matmul(A, B)
    got = linalg.matmul_mod_p(linalg.to_modular(A), linalg.to_modular(B))
    assert got.tolist() == [[x % linalg.MODULUS for x in row] for row in exact]
