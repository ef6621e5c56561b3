"""Banded binomial Toeplitz matrices ``T_{n,m,k}`` with ``(i,j)`` entry ``C(n, k+j-i)``.

Two binomial conventions are offered.  ``"standard"`` uses ``C(n,0) = 1``;
``"verbatim"`` zeroes ``C(n, i)`` for every ``i <= 0``.  The standard one is
the convention under which the matrix agrees with the two-variable
multiplication map, so it is the default.
"""

from __future__ import annotations

from math import comb
from typing import NamedTuple

from . import linalg
from .lefschetz import multiplication_matrix_on_bases
from .monomials import standard_monomials_of

CONVENTIONS = ("standard", "verbatim")


class ToeplitzSpec(NamedTuple):
    n: int
    m: int
    k: int


def banded_binomial(n: int, i: int, convention: str = "standard") -> int:
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown convention {convention!r}")
    lowest = 0 if convention == "standard" else 1
    if i < lowest or i > n:
        return 0
    return comb(n, i)


def toeplitz_matrix(n: int, m: int, k: int, convention: str = "standard") -> linalg.IntMatrix:
    if m < 1:
        raise ValueError("Toeplitz size m must be at least 1")
    return [[banded_binomial(n, k + j - i, convention) for j in range(m)] for i in range(m)]


def toeplitz_invertible(n: int, m: int, k: int, convention: str = "standard") -> tuple[bool, int]:
    det = linalg.determinant(toeplitz_matrix(n, m, k, convention))
    return det != 0, det


def two_variable_ideal(n: int, m: int, k: int) -> list[tuple[int, int]]:
    """Generators ``x^(m+n-k), y^(m+k)`` of the realising two-variable quotient.

    With these exponents ``(S/I)_{m-1}`` and ``(S/I)_{m+n-1}`` both have
    dimension ``m``; a ``y`` exponent of ``m+k+1`` would add the extra
    target monomial ``x^(n-1) y^(m+k)`` whenever ``k < n``.
    """
    return [(m + n - k, 0), (0, m + k)]


def two_variable_matrix(n: int, m: int, k: int) -> linalg.IntMatrix:
    """``x (x+y)^n : (S/I)_{m-1} -> (S/I)_{m+n-1}`` in graded-lex bases, rows = target."""
    gens = two_variable_ideal(n, m, k)
    src = standard_monomials_of(gens, 2, m - 1)
    tgt = standard_monomials_of(gens, 2, m + n - 1)
    return multiplication_matrix_on_bases(src, tgt, n, (1, 1))


def reorder_to_toeplitz_bases(M: linalg.IntMatrix) -> linalg.IntMatrix:
    """Reverse both bases, turning the graded-lex matrix into ``T_{n,m,k}``.

    In graded-lex order the multiplication matrix has entry
    ``C(n, k + row - col)``, the transpose of ``T``; reversing rows and
    columns maps ``T^t`` back to ``T``.
    """
    return [row[::-1] for row in M[::-1]]


def two_var_cross_oracle(n: int, m: int, k: int, convention: str = "standard") -> bool:
    """Whether ``T_{n,m,k}`` equals the reordered two-variable multiplication matrix."""
    if not 0 <= k <= n:
        raise ValueError("cross oracle needs 0 <= k <= n")
    M = two_variable_matrix(n, m, k)
    if len(M) != m or any(len(row) != m for row in M):
        return False
    return reorder_to_toeplitz_bases(M) == toeplitz_matrix(n, m, k, convention)
