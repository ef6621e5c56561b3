"""Multiplication and differentiation maps, WLP/SLP verdicts, kernel witnesses.

Multiplication by ``l^t`` sends the basis monomial ``u`` of ``(S/I)_j`` to
``sum_v  t!/prod (v-u)_i! * prod c_i^(v-u)_i * v`` over standard ``v >= u``
of degree ``j + t``; everything non-standard is dropped because ``I`` is
monomial.  The differentiation action on the inverse system is
``x_i o y^b = b_i y^(b - e_i)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Sequence

import numpy as np

from . import linalg
from .monomials import Monomial, MonomialIdeal, format_monomial, hilbert_at, hilbert_function, monomials_of_degree, standard_monomials

LinearForm = tuple[int, ...]

RANDOM_COEFF_MAX = 10**6


class InternalInconsistency(RuntimeError):
    """A mathematically guaranteed identity failed; indicates a bug."""


class NoWitness(ValueError):
    """The dual differentiation map is injective, so no kernel form exists."""


def canonical_form(n: int) -> LinearForm:
    return (1,) * n


def random_form(n: int, rng: random.Random) -> LinearForm:
    return tuple(rng.randint(1, RANDOM_COEFF_MAX) for _ in range(n))


def _check_form(ell: Sequence[int], n: int) -> LinearForm:
    ell = tuple(int(c) for c in ell)
    if len(ell) != n:
        raise ValueError(f"linear form has {len(ell)} coefficients, expected {n}")
    if not any(ell):
        raise ValueError("linear form is zero")
    return ell


@lru_cache(maxsize=1024)
def power_terms(ell: LinearForm, t: int) -> tuple[tuple[Monomial, int], ...]:
    """Expansion of ``l^t`` as ``(exponent, coefficient)`` pairs, zeros dropped."""
    out = []
    ft = factorial(t)
    for e in monomials_of_degree(len(ell), t):
        coef = ft
        for k in e:
            coef //= factorial(k)
        for c, k in zip(ell, e):
            coef *= c**k
        if coef:
            out.append((e, coef))
    return tuple(out)


def multiplication_matrix_on_bases(src: Sequence[Monomial], tgt: Sequence[Monomial], t: int, ell: LinearForm) -> linalg.IntMatrix:
    """Matrix of ``x l^t`` from span(src) to span(tgt); other monomials are dropped."""
    index = {v: r for r, v in enumerate(tgt)}
    M = linalg.zeros(len(tgt), len(src))
    terms = power_terms(tuple(ell), t)
    for col, u in enumerate(src):
        for e, coef in terms:
            r = index.get(tuple(a + b for a, b in zip(u, e)))
            if r is not None:
                M[r][col] += coef
    return M


def multiplication_matrix(ideal: MonomialIdeal, j: int, t: int, ell: Sequence[int]) -> linalg.IntMatrix:
    """``x l^t : (S/I)_j -> (S/I)_{j+t}``; rows are the target basis."""
    if t < 1:
        raise ValueError("power must be at least 1")
    ell = _check_form(ell, ideal.n)
    return multiplication_matrix_on_bases(standard_monomials(ideal, j), standard_monomials(ideal, j + t), t, ell)


def differentiation_matrix(ideal: MonomialIdeal, k: int, ell: Sequence[int], verify: bool = False) -> linalg.IntMatrix:
    """``o l : (I^-1)_k -> (I^-1)_{k-1}``; rows are degree ``k-1`` dual monomials.

    With ``verify`` the rank is compared to the dual multiplication map.
    """
    if k < 1:
        raise ValueError("differentiation needs k >= 1")
    ell = _check_form(ell, ideal.n)
    rows = standard_monomials(ideal, k - 1)
    cols = standard_monomials(ideal, k)
    index = {v: r for r, v in enumerate(rows)}
    D = linalg.zeros(len(rows), len(cols))
    for col, u in enumerate(cols):
        for i, c in enumerate(ell):
            if u[i] and c:
                r = index.get(u[:i] + (u[i] - 1,) + u[i + 1:])
                if r is not None:
                    D[r][col] += c * u[i]
    if verify:
        M = multiplication_matrix(ideal, k - 1, 1, ell)
        if linalg.rank(D) != linalg.rank(M):
            raise InternalInconsistency(f"differentiation/multiplication rank mismatch in degree {k}")
    return D


@dataclass(frozen=True)
class Cell:
    j: int
    t: int
    src: int
    tgt: int
    rank: int

    @property
    def maximal(self) -> bool:
        return self.rank == min(self.src, self.tgt)

    @property
    def surjective(self) -> bool:
        return self.rank == self.tgt

    @property
    def injective(self) -> bool:
        return self.rank == self.src

    def to_json(self) -> dict:
        return {"j": self.j, "t": self.t, "src": self.src, "tgt": self.tgt, "rank": self.rank, "maximal": self.maximal}


@dataclass(frozen=True)
class KernelForm:
    """``F = sum a_m m`` in the inverse system, integer coefficients."""

    degree: int
    terms: tuple[tuple[Monomial, int], ...]

    @property
    def support(self) -> list[Monomial]:
        return [m for m, _ in self.terms]

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "terms": [{"mono": list(m), "coef": str(a)} for m, a in self.terms],
        }

    def __str__(self) -> str:
        return " + ".join(f"({a})*{format_monomial(m).replace('x', 'y')}" for m, a in self.terms)


@dataclass
class LefschetzReport:
    kind: str
    ell: LinearForm
    cells: list[Cell]
    witnesses: list[KernelForm] = field(default_factory=list)
    trial: int | None = None

    @property
    def holds(self) -> bool:
        return all(c.maximal for c in self.cells)

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    @property
    def failures(self) -> list[Cell]:
        return [c for c in self.cells if not c.maximal]

    @property
    def failure_degrees(self) -> list[int]:
        return sorted({c.j for c in self.failures})

    def cell(self, j: int, t: int = 1) -> Cell | None:
        return next((c for c in self.cells if c.j == j and c.t == t), None)

    def to_json(self) -> dict:
        out = {
            "kind": self.kind,
            "verdict": self.verdict,
            "ell": [str(c) for c in self.ell],
            "failure_degrees": self.failure_degrees,
            "cells": [c.to_json() for c in self.cells],
            "witnesses": [w.to_json() for w in self.witnesses],
        }
        if self.trial is not None:
            out["trial"] = self.trial
        return out


class PowerMaps:
    """Rank oracle for ``x l^t`` on one quotient, reusing one-step residues.

    Residue images of ``x l^t`` are products of one-step residue matrices;
    the exact multinomial matrix is built only when the residue rank is
    not already full.
    """

    def __init__(self, ideal: MonomialIdeal, ell: Sequence[int]):
        self.ideal = ideal
        self.ell = _check_form(ell, ideal.n)
        self._step: dict[int, np.ndarray] = {}
        self._power: dict[tuple[int, int], np.ndarray] = {}

    def dim(self, k: int) -> int:
        return len(standard_monomials(self.ideal, k)) if k >= 0 else 0

    def step(self, j: int) -> np.ndarray:
        if j not in self._step:
            M = multiplication_matrix(self.ideal, j, 1, self.ell)
            self._step[j] = linalg.to_modular(M, cols=self.dim(j))
        return self._step[j]

    def power(self, j: int, t: int) -> np.ndarray:
        if t == 1:
            return self.step(j)
        key = (j, t)
        if key not in self._power:
            self._power[key] = linalg.matmul_mod_p(self.step(j + t - 1), self.power(j, t - 1))
        return self._power[key]

    def cell(self, j: int, t: int) -> Cell:
        src, tgt = self.dim(j), self.dim(j + t)
        full = min(src, tgt)
        if full == 0:
            return Cell(j, t, src, tgt, 0)
        if linalg.rank_mod_p(self.power(j, t)) == full:
            return Cell(j, t, src, tgt, full)
        exact = multiplication_matrix(self.ideal, j, t, self.ell)
        return Cell(j, t, src, tgt, linalg.rank(exact))


def _assert_surjective_tail(ideal: MonomialIdeal, hf: Sequence[int], cells: Sequence[Cell]) -> None:
    # once x l is onto in degree d, the cokernel vanishes from there on
    d = ideal.d
    if hilbert_at(hf, d) > hilbert_at(hf, d - 1):
        return
    start = next((c for c in cells if c.j == d - 1), None)
    if start is None or not start.surjective:
        return
    bad = [c.j for c in cells if c.j >= d - 1 and not c.surjective]
    if bad:
        raise InternalInconsistency(f"x l surjective at degree {d - 1} but not at {bad}")


def wlp_report(ideal: MonomialIdeal, ell: Sequence[int], witnesses: bool = False) -> LefschetzReport:
    """Maximal-rank table of ``x l`` in every degree for a fixed ``l``."""
    ideal.require_artinian()
    hf = hilbert_function(ideal)
    maps = PowerMaps(ideal, ell)
    cells = [maps.cell(j, 1) for j in range(len(hf) - 1)]
    _assert_surjective_tail(ideal, hf, cells)
    report = LefschetzReport("wlp", maps.ell, cells)
    if witnesses:
        report.witnesses = [wlp_failure_witness(ideal, c.j, maps.ell) for c in report.failures]
    return report


def _best_of_trials(run, n: int, seed: int, trials: int) -> LefschetzReport:
    rng = random.Random(seed)
    best = None
    for k in range(trials):
        report = run(random_form(n, rng))
        report.trial = k
        if report.holds:
            return report
        if best is None or len(report.failures) < len(best.failures):
            best = report
    return best


def wlp_check(ideal: MonomialIdeal, ell: Sequence[int] | None = None, *, mode: str = "canonical",
              seed: int = 0, trials: int = 5, witnesses: bool = False) -> LefschetzReport:
    """WLP verdict; canonical element ``x1 + ... + xn`` unless ``ell`` or random mode is given.

    Random mode returns the first trial with maximal rank everywhere, or the
    trial with the fewest failing degrees.
    """
    if ell is not None:
        return wlp_report(ideal, ell, witnesses)
    if mode == "canonical":
        return wlp_report(ideal, canonical_form(ideal.n), witnesses)
    if mode == "random":
        return _best_of_trials(lambda f: wlp_report(ideal, f, witnesses), ideal.n, seed, trials)
    raise ValueError(f"unknown mode {mode!r}")


def slp_report(ideal: MonomialIdeal, ell: Sequence[int]) -> LefschetzReport:
    ideal.require_artinian()
    hf = hilbert_function(ideal)
    top = len(hf) - 2
    maps = PowerMaps(ideal, ell)
    cells = []
    for t in range(1, top + 2):
        for j in range(0, top - t + 2):
            if maps.dim(j) and maps.dim(j + t):
                cells.append(maps.cell(j, t))
    return LefschetzReport("slp", maps.ell, cells)


def slp_check(ideal: MonomialIdeal, mode: str = "canonical", seed: int = 0, trials: int = 5) -> LefschetzReport:
    """SLP verdict for the canonical element or the best of seeded random forms."""
    if mode == "canonical":
        return slp_report(ideal, canonical_form(ideal.n))
    if mode == "random":
        return _best_of_trials(lambda f: slp_report(ideal, f), ideal.n, seed, trials)
    raise ValueError(f"unknown mode {mode!r}")


def power_map_check(ideal: MonomialIdeal, t: int, ell: Sequence[int]) -> LefschetzReport:
    """Maximal rank of ``x l^t : (S/I)_j -> (S/I)_{j+t}`` for every ``j``."""
    if t < 1:
        raise ValueError("power must be at least 1")
    hf = hilbert_function(ideal)
    top = len(hf) - 2
    maps = PowerMaps(ideal, ell)
    cells = [maps.cell(j, t) for j in range(0, top - t + 2)]
    return LefschetzReport("power", maps.ell, cells)


def wlp_failure_witness(ideal: MonomialIdeal, j: int, ell: Sequence[int] | None = None) -> KernelForm:
    """Nonzero ``F`` in ``(I^-1)_{j+1}`` with ``l o F = 0``.

    Such an ``F`` exists exactly when ``x l : (S/I)_j -> (S/I)_{j+1}`` is
    not surjective.  Coefficients are coprime with a positive leading term.
    """
    ell = canonical_form(ideal.n) if ell is None else _check_form(ell, ideal.n)
    D = differentiation_matrix(ideal, j + 1, ell)
    basis = standard_monomials(ideal, j + 1)
    kernel = linalg.nullspace(D, cols=len(basis))
    if not kernel:
        raise NoWitness(f"x l is surjective onto degree {j + 1}; no kernel form")
    coeffs = kernel[0].primitive()
    if any(linalg.matvec(D, coeffs)):
        raise InternalInconsistency("kernel vector is not annihilated")
    return KernelForm(j + 1, tuple((m, a) for m, a in zip(basis, coeffs) if a))


def is_kernel_form(ideal: MonomialIdeal, F: KernelForm, ell: Sequence[int] | None = None) -> bool:
    ell = canonical_form(ideal.n) if ell is None else _check_form(ell, ideal.n)
    if not F.terms or F.degree < 1:
        return False
    basis = standard_monomials(ideal, F.degree)
    coeffs = F.as_dict()
    if any(m not in basis for m in coeffs) or not any(coeffs.values()):
        return False
    D = differentiation_matrix(ideal, F.degree, ell)
    return not any(linalg.matvec(D, [coeffs.get(m, 0) for m in basis]))


def check_support_chain(ideal: MonomialIdeal, F: KernelForm) -> tuple[bool, list[tuple[Monomial, int, int]]]:
    """Check that every ``y_i``-degree below ``deg_i(m)`` occurs in ``supp(F)``.

    Returns ``(ok, violations)`` with violations ``(m, i, missing degree)``.
    ``F`` must be annihilated by the canonical element.
    """
    if not is_kernel_form(ideal, F):
        raise ValueError("not a kernel form of the canonical differentiation map")
    supp = F.support
    present = [{m[i] for m in supp} for i in range(ideal.n)]
    violations = []
    for m in supp:
        for i, e in enumerate(m):
            for k in range(e):
                if k not in present[i]:
                    violations.append((m, i, k))
    return not violations, violations
