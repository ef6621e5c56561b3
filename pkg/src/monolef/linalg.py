"""Exact linear algebra over the rationals for integer matrices.

Matrices are lists of rows of Python ints.  Every verdict in the package
rests on these routines, so nothing here ever touches floating point.

``rank`` and ``determinant`` use Bareiss fraction-free elimination.
``maximal_rank`` first tries a cheap modular certificate: reduction mod a
prime can only lose rank, so full rank mod p proves full rank over Q.
When the certificate is inconclusive the exact rank is computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

import numpy as np

IntMatrix = list[list[int]]

# Products of two residues stay below 2**50; row sums of a few thousand
# such products fit in int64.
MODULUS = 33554393


def shape(M: Sequence[Sequence[int]], cols: int | None = None) -> tuple[int, int]:
    rows = len(M)
    if rows == 0:
        return 0, cols or 0
    return rows, len(M[0])


def zeros(rows: int, cols: int) -> IntMatrix:
    return [[0] * cols for _ in range(rows)]


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def transpose(M: Sequence[Sequence[int]], cols: int | None = None) -> IntMatrix:
    r, c = shape(M, cols)
    return [[M[i][j] for i in range(r)] for j in range(c)]


def matmul(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]]) -> IntMatrix:
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matvec(A: Sequence[Sequence[int]], v: Sequence) -> list:
    return [sum(a * x for a, x in zip(row, v)) for row in A]


def _bareiss(M: Sequence[Sequence[int]]) -> tuple[int, int]:
    """Fraction-free elimination; returns ``(rank, sign * last pivot)``.

    For a nonsingular square input the second value is the determinant.
    Pivots are chosen as the nonzero entry of smallest magnitude in the
    current column, which keeps intermediate growth down.
    """
    A = [list(row) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    sign = 1
    prev = 1
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = None
        for i in range(r, rows):
            v = A[i][c]
            if v and (piv is None or abs(v) < abs(A[piv][c])):
                piv = i
        if piv is None:
            continue
        if piv != r:
            A[r], A[piv] = A[piv], A[r]
            sign = -sign
        p = A[r][c]
        row_r = A[r]
        for i in range(r + 1, rows):
            row_i = A[i]
            a = row_i[c]
            if a:
                for j in range(c + 1, cols):
                    row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            else:
                for j in range(c + 1, cols):
                    row_i[j] = (p * row_i[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r, sign * prev


def rank(M: Sequence[Sequence[int]]) -> int:
    """Rank over Q, exact."""
    if not M or not M[0]:
        return 0
    return _bareiss(M)[0]


def determinant(M: Sequence[Sequence[int]]) -> int:
    n = len(M)
    if any(len(row) != n for row in M):
        raise ValueError(f"determinant needs a square matrix, got {n}x{len(M[0]) if n else 0}")
    if n == 0:
        return 1
    r, det = _bareiss(M)
    return det if r == n else 0


@dataclass(frozen=True)
class RationalVector:
    """Vector ``numerators / denominator`` with ``gcd`` reduced to 1."""

    numerators: tuple[int, ...]
    denominator: int = 1

    @classmethod
    def from_fractions(cls, values: Sequence[Fraction]) -> RationalVector:
        den = 1
        for v in values:
            den = lcm(den, Fraction(v).denominator)
        nums = [int(Fraction(v) * den) for v in values]
        g = gcd(den, *nums)
        return cls(tuple(x // g for x in nums), den // g)

    def as_fractions(self) -> list[Fraction]:
        return [Fraction(x, self.denominator) for x in self.numerators]

    def primitive(self) -> tuple[int, ...]:
        """Integer multiple with coprime entries and positive first nonzero entry."""
        g = gcd(*self.numerators)
        if g == 0:
            return self.numerators
        out = [x // g for x in self.numerators]
        lead = next(x for x in out if x)
        if lead < 0:
            out = [-x for x in out]
        return tuple(out)

    def __len__(self) -> int:
        return len(self.numerators)


def rref(M: Sequence[Sequence[int]], cols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    A = [[Fraction(x) for x in row] for row in M]
    rows, ncols = shape(M, cols)
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, rows) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        A[r] = [x * inv for x in A[r]]
        for i in range(rows):
            if i != r and A[i][c] != 0:
                f = A[i][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return A, pivots


def nullspace(M: Sequence[Sequence[int]], cols: int | None = None) -> list[RationalVector]:
    """Basis of the right kernel over Q, one vector per free column.

    ``cols`` is needed only to describe a 0-row matrix with columns.
    """
    rows, ncols = shape(M, cols)
    if ncols == 0:
        return []
    if rows == 0:
        return [RationalVector(tuple(int(i == j) for i in range(ncols))) for j in range(ncols)]
    R, pivots = rref(M, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -R[r][f]
        basis.append(RationalVector.from_fractions(v))
    return basis


def to_modular(M: Sequence[Sequence[int]], p: int = MODULUS, cols: int | None = None) -> np.ndarray:
    rows, ncols = shape(M, cols)
    out = np.zeros((rows, ncols), dtype=np.int64)
    for i, row in enumerate(M):
        out[i] = [x % p for x in row]
    return out


def rank_mod_p(A: np.ndarray, p: int = MODULUS) -> int:
    """Rank of an int64 residue matrix over GF(p)."""
    A = np.array(A, dtype=np.int64) % p
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), p - 2, p)
        A[r] = (A[r] * inv) % p
        below = A[r + 1:, c].copy()
        if below.any():
            A[r + 1:] = (A[r + 1:] - np.outer(below, A[r]) % p) % p
        r += 1
    return r


def matmul_mod_p(A: np.ndarray, B: np.ndarray, p: int = MODULUS) -> np.ndarray:
    if A.shape[1] == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    # chunk the inner dimension so partial sums stay inside int64
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    step = 4096
    for s in range(0, A.shape[1], step):
        out = (out + A[:, s:s + step] @ B[s:s + step]) % p
    return out


def maximal_rank(M: Sequence[Sequence[int]], cols: int | None = None, modular: np.ndarray | None = None) -> tuple[int, bool]:
    """Exact ``(rank, rank == min(rows, cols))``.

    ``modular`` may carry a precomputed residue image of ``M``.
    """
    rows, ncols = shape(M, cols)
    full = min(rows, ncols)
    if full == 0:
        return 0, True
    A = modular if modular is not None else to_modular(M, cols=ncols)
    if rank_mod_p(A) == full:
        return full, True
    r = rank(M)
    return r, r == full
