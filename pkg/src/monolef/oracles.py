"""Independent brute-force routes used to double-check the fast paths.

Nothing here shares code with :mod:`monolef.lefschetz` or the Bareiss
elimination: polynomials are expanded by repeated multiplication, reduced
by testing divisibility against the generators, and ranks come from plain
Gaussian elimination over :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations, product
from typing import Sequence

Poly = dict[tuple[int, ...], int]


def poly_mul(f: Poly, g: Poly) -> Poly:
    out: Poly = {}
    for a, x in f.items():
        for b, y in g.items():
            m = tuple(p + q for p, q in zip(a, b))
            out[m] = out.get(m, 0) + x * y
    return {m: c for m, c in out.items() if c}


def reduce_mod(f: Poly, gens: Sequence[Sequence[int]]) -> Poly:
    return {m: c for m, c in f.items() if not any(all(g_i <= m_i for g_i, m_i in zip(g, m)) for g in gens)}


def linear_power(ell: Sequence[int], t: int) -> Poly:
    n = len(ell)
    lin = {tuple(int(k == i) for k in range(n)): c for i, c in enumerate(ell) if c}
    out: Poly = {(0,) * n: 1}
    for _ in range(t):
        out = poly_mul(out, lin)
    return out


def all_monomials(n: int, k: int) -> list[tuple[int, ...]]:
    """Degree-``k`` monomials by filtering the full box; order is lex-descending."""
    return sorted((e for e in product(range(k + 1), repeat=n) if sum(e) == k), reverse=True)


def quotient_basis(gens: Sequence[Sequence[int]], n: int, k: int) -> list[tuple[int, ...]]:
    return [m for m in all_monomials(n, k) if not any(all(a <= b for a, b in zip(g, m)) for g in gens)]


def multiplication_matrix(gens: Sequence[Sequence[int]], n: int, j: int, t: int, ell: Sequence[int]) -> list[list[int]]:
    """Column ``u`` is the coordinate vector of ``l^t * u`` reduced modulo the ideal."""
    src = quotient_basis(gens, n, j)
    tgt = quotient_basis(gens, n, j + t)
    power = linear_power(ell, t)
    cols = []
    for u in src:
        image = reduce_mod(poly_mul(power, {u: 1}), gens)
        cols.append([image.get(v, 0) for v in tgt])
    return [[cols[c][r] for c in range(len(src))] for r in range(len(tgt))]


def fraction_rank(M: Sequence[Sequence[int]]) -> int:
    A = [[Fraction(x) for x in row] for row in M]
    rank = 0
    cols = len(A[0]) if A else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(A)) if A[i][c] != 0), None)
        if piv is None:
            continue
        A[rank], A[piv] = A[piv], A[rank]
        for i in range(rank + 1, len(A)):
            f = A[i][c] / A[rank][c]
            if f:
                A[i] = [x - f * y for x, y in zip(A[i], A[rank])]
        rank += 1
    return rank


def cofactor_determinant(M: Sequence[Sequence[int]]) -> int:
    n = len(M)
    if n == 0:
        return 1
    if n == 1:
        return M[0][0]
    return sum((-1) ** c * M[0][c] * cofactor_determinant([row[:c] + row[c + 1:] for row in M[1:]]) for c in range(n) if M[0][c])


def permutation_determinant(M: Sequence[Sequence[int]]) -> int:
    n = len(M)
    total = 0
    for perm in permutations(range(n)):
        inv = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = (-1) ** inv
        for i, p in enumerate(perm):
            term *= M[i][p]
        total += term
    return total


def power_map_maximal(gens: Sequence[Sequence[int]], n: int, t: int, ell: Sequence[int], top: int) -> dict[int, bool]:
    """Per-degree maximal-rank verdicts of ``x l^t`` computed from scratch."""
    out = {}
    for j in range(0, top - t + 2):
        M = multiplication_matrix(gens, n, j, t, ell)
        rows = len(M)
        cols = len(quotient_basis(gens, n, j))
        out[j] = (fraction_rank(M) if rows and cols else 0) == min(rows, cols)
    return out
