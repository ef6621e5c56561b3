"""Line segments of degree-d survivors and the divisibility hypotheses built on them.

Variable indices are 0-based throughout this module.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .monomials import Monomial, MonomialIdeal, monomials_of_degree, standard_monomials


def _shift(m: Monomial, src: int, dst: int) -> Monomial:
    """``(x_dst / x_src) * m``."""
    out = list(m)
    out[src] -= 1
    out[dst] += 1
    return tuple(out)


@dataclass(frozen=True)
class LineSegment:
    axes: tuple[int, int]
    monomials: tuple[Monomial, ...]
    maximal: bool

    @property
    def divisor(self) -> tuple[int, int]:
        """Largest ``(a, b)`` with ``x_i^a x_j^b`` dividing every member."""
        i, j = self.axes
        return min(m[i] for m in self.monomials), min(m[j] for m in self.monomials)

    def is_chain(self) -> bool:
        i, j = self.axes
        ms = self.monomials
        return all(m[i] and m[j] for m in ms) and all(_shift(a, i, j) == b for a, b in zip(ms, ms[1:]))

    def to_json(self) -> dict:
        return {"axes": [self.axes[0] + 1, self.axes[1] + 1], "monomials": [list(m) for m in self.monomials], "maximal": self.maximal}


def segment_decomposition(ideal: MonomialIdeal, i: int, j: int) -> list[LineSegment]:
    """Split degree-d survivors divisible by ``x_i x_j`` into maximal chains.

    Groups share the exponents of every other variable; a group is cut
    wherever the ``x_i`` exponent skips a value.
    """
    if not 0 <= i < j < ideal.n:
        raise ValueError(f"need 0 <= i < j < n, got ({i}, {j})")
    groups: dict[tuple, list[Monomial]] = defaultdict(list)
    for m in standard_monomials(ideal, ideal.d):
        if m[i] and m[j]:
            rest = tuple(e for k, e in enumerate(m) if k not in (i, j))
            groups[rest].append(m)
    out = []
    for rest in sorted(groups, reverse=True):
        run: list[Monomial] = []
        for m in sorted(groups[rest], key=lambda m: -m[i]):
            if run and run[-1][i] != m[i] + 1:
                out.append(_close(ideal, (i, j), run))
                run = []
            run.append(m)
        out.append(_close(ideal, (i, j), run))
    return out


def _close(ideal: MonomialIdeal, axes: tuple[int, int], run: list[Monomial]) -> LineSegment:
    i, j = axes
    maximal = ideal.contains(_shift(run[0], j, i)) and ideal.contains(_shift(run[-1], i, j))
    return LineSegment(axes, tuple(run), maximal)


def segment_ideal(segment: LineSegment, n: int) -> MonomialIdeal:
    """Ideal generated by every degree-d monomial outside the segment."""
    d = sum(segment.monomials[0])
    members = set(segment.monomials)
    return MonomialIdeal(n, d, tuple(m for m in monomials_of_degree(n, d) if m not in members))


class XYHypothesis(NamedTuple):
    i: int
    j: int
    a: int
    b: int


def xy_candidates(ideal: MonomialIdeal) -> list[XYHypothesis]:
    """``(i, j, min deg_i, min deg_j)`` over degree-d survivors, for every pair."""
    survivors = standard_monomials(ideal, ideal.d)
    if not survivors:
        return []
    return [XYHypothesis(i, j, min(m[i] for m in survivors), min(m[j] for m in survivors))
            for i, j in combinations(range(ideal.n), 2)]


def xy_hypothesis(ideal: MonomialIdeal) -> XYHypothesis | None:
    """First pair with maximal ``a + b >= 1`` such that ``x_i^a x_j^b`` divides every survivor."""
    ideal.require_artinian()
    best = None
    for cand in xy_candidates(ideal):
        if cand.a + cand.b >= 1 and (best is None or cand.a + cand.b > best.a + best.b):
            best = cand
    return best


def slp_hypothesis(ideal: MonomialIdeal) -> tuple[int, int] | None:
    """First ``(i, j)`` with: ``x_i x_j | m`` iff ``m`` not in ``I``, for all ``m`` of degree d."""
    ideal.require_artinian()
    degree_d = list(monomials_of_degree(ideal.n, ideal.d))
    for i, j in combinations(range(ideal.n), 2):
        if all(bool(m[i] and m[j]) != ideal.contains(m) for m in degree_d):
            return i, j
    return None


class VacuousHypothesis(ValueError):
    """``(S/I)_d = 0``: no survivors to constrain."""


def conjecture39_exponent(ideal: MonomialIdeal) -> tuple[int, ...]:
    """Componentwise minimum of the degree-d survivors' exponent vectors."""
    ideal.require_artinian()
    survivors = standard_monomials(ideal, ideal.d)
    if not survivors:
        raise VacuousHypothesis("(S/I)_d = 0")
    return tuple(min(m[k] for m in survivors) for k in range(ideal.n))
