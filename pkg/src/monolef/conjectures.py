"""Instance checks for the EHU containment statements and the divisibility conjecture.

``ehu_containment`` decides ``m^d ⊆ I + J`` (or ``I + J^2``) where ``J`` is
generated by ``n - p + 1`` linear forms.  As ``I`` is monomial, spanning
``S_d`` is equivalent to ``J_d`` (resp. ``(J^2)_d``) mapping onto the
standard monomials of degree ``d``, which is what the rank test checks.

General linear forms are realised by seeded random positive coefficients:
a single spanning trial certifies the generic statement, while failure in
every trial is only evidence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement, permutations
from math import comb
from typing import Iterator, Sequence

from . import linalg, oracles
from .lefschetz import InternalInconsistency, LefschetzReport, canonical_form, power_map_check, random_form
from .monomials import Monomial, MonomialIdeal, hilbert_function, monomials_of_degree, standard_monomials
from .segments import VacuousHypothesis, conjecture39_exponent

Poly = dict[Monomial, int]


def _linear_poly(form: Sequence[int]) -> Poly:
    n = len(form)
    return {tuple(int(k == i) for k in range(n)): c for i, c in enumerate(form) if c}


def forms_independent(forms: Sequence[Sequence[int]]) -> bool:
    return not forms or linalg.rank([list(f) for f in forms]) == len(forms)


def _ideal_generators(forms: Sequence[Sequence[int]], squared: bool) -> list[Poly]:
    if not squared:
        return [_linear_poly(f) for f in forms]
    return [oracles.poly_mul(_linear_poly(f), _linear_poly(g)) for f, g in combinations_with_replacement(forms, 2)]


def spans_degree_d(ideal: MonomialIdeal, forms: Sequence[Sequence[int]], squared: bool) -> bool:
    """``S_d ⊆ I + (forms)`` (or ``(forms)^2``) by an exact rank test modulo ``I``."""
    d = ideal.d
    rows = standard_monomials(ideal, d)
    if not rows:
        return True
    index = {m: r for r, m in enumerate(rows)}
    cols = []
    for q in _ideal_generators(forms, squared):
        shift = d - (2 if squared else 1)
        if shift < 0:
            continue
        for u in monomials_of_degree(ideal.n, shift):
            col = [0] * len(rows)
            for e, c in q.items():
                r = index.get(tuple(a + b for a, b in zip(e, u)))
                if r is not None:
                    col[r] += c
            if any(col):
                cols.append(col)
    if len(cols) < len(rows):
        return False
    _, full = linalg.maximal_rank(linalg.transpose(cols))
    return full


def ehu_containment(ideal: MonomialIdeal, p: int, forms: Sequence[Sequence[int]] | None = None, *,
                    squared: bool = False, seed: int = 0, trials: int = 5) -> list[bool]:
    """Verdict per trial of ``m^d ⊆ I + (l_p, ..., l_n)`` (``^2`` when ``squared``).

    ``p`` ranges over ``1..n+1``; ``p = n+1`` means no forms at all.  With
    explicit ``forms`` there is exactly one trial.
    """
    n = ideal.n
    if not 1 <= p <= n + 1:
        raise ValueError(f"p must lie in 1..{n + 1}, got {p}")
    count = n - p + 1
    if forms is not None:
        forms = [tuple(int(c) for c in f) for f in forms]
        if len(forms) != count:
            raise ValueError(f"expected {count} linear forms for p={p}, got {len(forms)}")
        if any(len(f) != n for f in forms):
            raise ValueError(f"linear forms must have {n} coefficients")
        if not forms_independent(forms):
            raise ValueError("linear forms are linearly dependent")
        return [spans_degree_d(ideal, forms, squared)]
    rng = random.Random(seed)
    verdicts = []
    for _ in range(trials):
        drawn = [random_form(n, rng) for _ in range(count)]
        while not forms_independent(drawn):
            drawn = [random_form(n, rng) for _ in range(count)]
        verdicts.append(spans_degree_d(ideal, drawn, squared))
    return verdicts


def coordinate_form_sets(n: int, count: int) -> list[list[tuple[int, ...]]]:
    """Every choice of ``count`` distinct coordinate forms ``x_i``."""
    return [[tuple(int(k == i) for k in range(n)) for i in subset] for subset in combinations(range(n), count)]


def pair_sum_forms(n: int) -> list[tuple[int, ...]]:
    """``x_i + x_j`` for ``i < j``."""
    return [tuple(int(k in (i, j)) for k in range(n)) for i, j in combinations(range(n), 2)]


@dataclass
class Conjecture39Result:
    avector: tuple[int, ...] | None
    report: LefschetzReport | None
    counterexample: bool
    oracle_checked: bool = False

    @property
    def a(self) -> int:
        return sum(self.avector) if self.avector else 0

    @property
    def hypothesis(self) -> bool:
        return self.a >= 1

    def to_json(self) -> dict:
        return {
            "avector": list(self.avector) if self.avector is not None else None,
            "a": self.a,
            "hypothesis": self.hypothesis,
            "cells": [c.to_json() for c in self.report.cells] if self.report else [],
            "counterexample": self.counterexample,
            "oracle_checked": self.oracle_checked,
        }


def conjecture39_check(ideal: MonomialIdeal) -> Conjecture39Result:
    """Test maximal rank of ``x (x1+...+xn)^a`` with ``a`` from the common divisor of the survivors.

    A failing degree is re-derived with the brute-force expansion oracle
    before it is reported as a counterexample.
    """
    try:
        avec = conjecture39_exponent(ideal)
    except VacuousHypothesis:
        return Conjecture39Result(None, None, False)
    a = sum(avec)
    if a < 1:
        return Conjecture39Result(avec, None, False)
    ell = canonical_form(ideal.n)
    report = power_map_check(ideal, a, ell)
    if report.holds:
        return Conjecture39Result(avec, report, False)
    top = len(hilbert_function(ideal)) - 2
    verdicts = oracles.power_map_maximal(ideal.gens, ideal.n, a, ell, top)
    fast = {c.j: c.maximal for c in report.cells}
    if verdicts != fast:
        raise InternalInconsistency(f"power-map verdicts disagree with the expansion oracle for {ideal}")
    return Conjecture39Result(avec, report, True, oracle_checked=True)


class SamplingError(ValueError):
    pass


def sample_ideal(n: int, d: int, gen_count: int, seed: int) -> MonomialIdeal:
    """Pure powers plus ``gen_count - n`` distinct uniformly drawn degree-d monomials."""
    total = comb(n + d - 1, d)
    if gen_count < n:
        raise SamplingError(f"need at least {n} generators for the pure powers, got {gen_count}")
    if gen_count > total:
        raise SamplingError(f"only {total} monomials of degree {d} in {n} variables, asked for {gen_count}")
    pure = [tuple(d if k == i else 0 for k in range(n)) for i in range(n)]
    others = [m for m in monomials_of_degree(n, d) if max(m) < d]
    extra = random.Random(seed).sample(others, gen_count - n)
    return MonomialIdeal(n, d, tuple(pure + extra))


def canonical_representative(ideal: MonomialIdeal) -> MonomialIdeal:
    """Orbit representative under permuting variables: the smallest sorted generator tuple."""
    best = None
    for perm in permutations(range(ideal.n)):
        cand = ideal.permuted(perm)
        if best is None or cand.gens < best.gens:
            best = cand
    return best


def exhaustive_ideals(n: int, d: int, gen_counts: range | None = None) -> Iterator[MonomialIdeal]:
    """All artinian ideals generated in degree ``d``, one per variable-permutation orbit."""
    pure = [tuple(d if k == i else 0 for k in range(n)) for i in range(n)]
    others = [m for m in monomials_of_degree(n, d) if max(m) < d]
    seen = set()
    for size in range(len(others) + 1):
        if gen_counts is not None and n + size not in gen_counts:
            continue
        for extra in combinations(others, size):
            rep = canonical_representative(MonomialIdeal(n, d, tuple(pure) + extra))
            if rep.gens not in seen:
                seen.add(rep.gens)
                yield rep
