"""Shared fixtures data, hypothesis strategies and brute-force oracles for the tests."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from monolef import oracles
from monolef.monomials import MonomialIdeal, monomials_of_degree

TOGLIATTI = MonomialIdeal.from_gens([(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)])
ALMOST_LINEAR_CUBIC = MonomialIdeal.from_gens(
    [(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 2, 0), (2, 1, 0), (1, 0, 2), (2, 0, 1), (0, 2, 1), (0, 1, 2)]
)
# degree-3 survivors are exactly the monomials divisible by x1*x2
SLP_PAIR_IDEAL = MonomialIdeal.from_gens(
    [(3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 0, 1), (1, 0, 2), (0, 2, 1), (0, 1, 2)]
)


@st.composite
def artinian_ideals(draw, n=st.integers(2, 3), d=st.integers(2, 4)):
    n = draw(n)
    d = draw(d)
    others = [m for m in monomials_of_degree(n, d) if max(m) < d]
    extra = draw(st.lists(st.sampled_from(others), unique=True)) if others else []
    pure = [tuple(d if k == i else 0 for k in range(n)) for i in range(n)]
    return MonomialIdeal(n, d, tuple(pure + extra))


def int_matrices(max_rows=6, max_cols=6, lo=-4, hi=4):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def almost_linear_family(n: int, d: int, max_removed: int = 3) -> list[MonomialIdeal]:
    """Ideals m^d minus a few monomials divisible by x1*...*xn."""
    full = list(monomials_of_degree(n, d))
    inner = [m for m in full if min(m) >= 1]
    out = []
    for k in range(1, min(len(inner), max_removed) + 1):
        for removed in combinations(inner, k):
            out.append(MonomialIdeal(n, d, tuple(m for m in full if m not in removed)))
    return out


def koszul_betti(ideal: MonomialIdeal, b) -> list[int]:
    """``beta_{i,b}(S/I)`` for i = 0..n from the Koszul complex of S/I in multidegree b."""
    n = ideal.n
    supp = [i for i in range(n) if b[i] >= 1]

    def alive(sigma):
        m = list(b)
        for i in sigma:
            m[i] -= 1
        return not ideal.contains(m)

    chains = [[s for s in combinations(supp, i) if alive(s)] for i in range(n + 1)]

    def boundary(i):
        rows, cols = chains[i - 1], chains[i]
        index = {s: r for r, s in enumerate(rows)}
        M = [[0] * len(cols) for _ in rows]
        for c, s in enumerate(cols):
            for pos in range(len(s)):
                face = s[:pos] + s[pos + 1:]
                if face in index:
                    M[index[face]][c] = (-1) ** pos
        return M

    ranks = [0] * (n + 2)
    for i in range(1, n + 1):
        if chains[i] and chains[i - 1]:
            ranks[i] = oracles.fraction_rank(boundary(i))
    return [len(chains[i]) - ranks[i] - ranks[i + 1] for i in range(n + 1)]


@st.composite
def ideals_with_forms(draw, coeffs=st.integers(-3, 3)):
    ideal = draw(artinian_ideals())
    ell = draw(st.lists(coeffs, min_size=ideal.n, max_size=ideal.n).filter(any))
    return ideal, tuple(ell)
