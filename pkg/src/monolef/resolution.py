"""Graded Betti numbers of ``S/I`` from upper Koszul simplicial complexes.

For a multidegree ``b`` the upper Koszul complex ``K^b(I)`` consists of the
squarefree ``tau <= b`` with ``x^(b - tau)`` in ``I`` and

    beta_{i+1, b}(S/I) = dim  H~_{i-1}(K^b(I); Q).

Only lcms of generator subsets can carry nonzero Betti numbers, so the
computation walks the lcm lattice and aggregates by total degree.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from . import linalg
from .monomials import Monomial, MonomialIdeal, hilbert_function, lcm

Face = tuple[int, ...]


class RegularityMismatch(RuntimeError):
    """The Betti-table and Hilbert-function regularities disagree."""


def lcm_multidegrees(ideal: MonomialIdeal) -> set[Monomial]:
    """All lcms of nonempty generator subsets."""
    found = set(ideal.gens)
    frontier = list(ideal.gens)
    while frontier:
        fresh = []
        for a in frontier:
            for g in ideal.gens:
                m = lcm(a, g)
                if m not in found:
                    found.add(m)
                    fresh.append(m)
        frontier = fresh
    return found


def upper_koszul_complex(ideal: MonomialIdeal, b: Sequence[int]) -> list[Face]:
    """Faces of ``K^b(I)``, sorted by size then lexicographically."""
    verts = [i for i, e in enumerate(b) if e >= 1]
    faces = []
    for size in range(len(verts) + 1):
        for tau in combinations(verts, size):
            m = list(b)
            for i in tau:
                m[i] -= 1
            if ideal.contains(m):
                faces.append(tau)
    return faces


def _is_closed(faces: set[Face]) -> bool:
    return all(f[:k] + f[k + 1:] in faces for f in faces for k in range(len(f)))


def boundary_matrix(lower: Sequence[Face], upper: Sequence[Face]) -> linalg.IntMatrix:
    """Simplicial boundary from ``upper`` (size q+1) to ``lower`` (size q)."""
    index = {f: r for r, f in enumerate(lower)}
    D = linalg.zeros(len(lower), len(upper))
    for c, f in enumerate(upper):
        for k in range(len(f)):
            D[index[f[:k] + f[k + 1:]]][c] = (-1) ** k
    return D


def reduced_homology_dims(faces: Iterable[Sequence[int]]) -> list[int]:
    """``[dim H~_{-1}, dim H~_0, ...]`` over Q.

    The void complex gives ``[0]``; the complex ``{()}`` gives ``[1]``.
    """
    faces = {tuple(sorted(f)) for f in faces}
    if not _is_closed(faces):
        raise ValueError("face set is not closed under taking subsets")
    if not faces:
        return [0]
    top = max(len(f) for f in faces)
    by_size = [sorted(f for f in faces if len(f) == s) for s in range(top + 1)]
    # ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
    ranks = [0] * (top + 2)
    for s in range(1, top + 1):
        if by_size[s] and by_size[s - 1]:
            ranks[s] = linalg.rank(boundary_matrix(by_size[s - 1], by_size[s]))
    return [len(by_size[s]) - ranks[s] - ranks[s + 1] for s in range(top + 1)]


@dataclass
class BettiTable:
    """``beta_{i,j}(S/I)`` with the multigraded refinement kept alongside."""

    n: int
    d: int
    table: dict[tuple[int, int], int]
    multigraded: dict[tuple[int, Monomial], int] = field(default_factory=dict)

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.table.get(key, 0)

    def nonzero(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, b) for (i, j), b in self.table.items() if b)

    def row(self, i: int) -> dict[int, int]:
        return {j: b for (k, j), b in self.table.items() if k == i and b}

    def euler_polynomial(self) -> dict[int, int]:
        """Coefficients of ``sum (-1)^i beta_{i,j} t^j``."""
        out: dict[int, int] = defaultdict(int)
        for (i, j), b in self.table.items():
            out[j] += (-1) ** i * b
        return {j: c for j, c in out.items() if c}

    def to_json(self) -> dict:
        return {"betti": [{"i": i, "j": j, "b": b} for i, j, b in self.nonzero()]}

    def pretty(self) -> str:
        """Macaulay2-style display: rows are ``j - i``, columns ``i``."""
        cells = self.nonzero()
        width = max(i for i, _, _ in cells) + 1
        shifts = sorted({j - i for i, j, _ in cells})
        lines = ["      " + " ".join(f"{i:>4}" for i in range(width))]
        for s in shifts:
            vals = [self.table.get((i, i + s), 0) for i in range(width)]
            lines.append(f"{s:>4}: " + " ".join(f"{v or '.':>4}" for v in vals))
        return "\n".join(lines)


def betti_table(ideal: MonomialIdeal) -> BettiTable:
    table: dict[tuple[int, int], int] = defaultdict(int)
    multi: dict[tuple[int, Monomial], int] = {}
    table[(0, 0)] = 1
    multi[(0, (0,) * ideal.n)] = 1
    for b in sorted(lcm_multidegrees(ideal)):
        dims = reduced_homology_dims(upper_koszul_complex(ideal, b))
        for q, dim in enumerate(dims):
            if dim:
                # dims[0] is H~_{-1}, which feeds homological index 1
                table[(q + 1, sum(b))] += dim
                multi[(q + 1, b)] = dim
    return BettiTable(ideal.n, ideal.d, dict(table), multi)


def linear_steps(B: BettiTable, d: int | None = None) -> int:
    """Largest ``r <= n`` with ``beta_{i,j} = 0`` for ``j != i + d - 1``, ``1 <= i <= r``."""
    d = B.d if d is None else d
    r = 0
    for i in range(1, B.n + 1):
        if any(b and j != i + d - 1 for j, b in B.row(i).items()):
            break
        r = i
    return r


def euler_identity_holds(B: BettiTable, hf: Sequence[int]) -> bool:
    """``sum (-1)^i beta_{i,j} t^j == H(t) (1 - t)^n`` coefficientwise."""
    rhs: dict[int, int] = defaultdict(int)
    for k, h in enumerate(hf):
        for s in range(B.n + 1):
            rhs[k + s] += h * comb(B.n, s) * (-1) ** s
    return B.euler_polynomial() == {j: c for j, c in rhs.items() if c}


def regularity_from_betti(B: BettiTable) -> int:
    return max(j - i for i, j, _ in B.nonzero())


def regularity(ideal: MonomialIdeal, B: BettiTable | None = None) -> int:
    """``reg(S/I)``: ``max(j - i)`` over the Betti table, checked against the top Hilbert degree."""
    hf = hilbert_function(ideal)
    B = betti_table(ideal) if B is None else B
    from_betti = regularity_from_betti(B)
    top = len(hf) - 2
    if from_betti != top:
        raise RegularityMismatch(f"Betti regularity {from_betti} != top Hilbert degree {top} for {ideal}")
    return from_betti
