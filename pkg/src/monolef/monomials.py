"""Monomials, equigenerated monomial ideals and their quotient bases.

A monomial in ``n`` variables is a plain tuple of non-negative exponents.
The same tuple doubles as a dual monomial of the inverse system.  Inside a
fixed degree, monomials are listed in lexicographic order with
``x1 > x2 > ... > xn`` (so the graded-lex order overall).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Iterable, Iterator, NamedTuple, Sequence

Monomial = tuple[int, ...]


def degree(m: Sequence[int]) -> int:
    return sum(m)


def support(m: Sequence[int]) -> tuple[int, ...]:
    """Indices of the variables dividing ``m``."""
    return tuple(i for i, e in enumerate(m) if e)


def divides(a: Sequence[int], b: Sequence[int]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Sequence[int], b: Sequence[int]) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def unit(n: int, i: int) -> Monomial:
    return tuple(1 if k == i else 0 for k in range(n))


def monomials_of_degree(n: int, k: int) -> Iterator[Monomial]:
    """All degree-``k`` monomials in ``n`` variables, lex-descending."""
    if n == 0:
        if k == 0:
            yield ()
        return
    if n == 1:
        yield (k,)
        return
    for e in range(k, -1, -1):
        for rest in monomials_of_degree(n - 1, k - e):
            yield (e,) + rest


def monomial_count(n: int, k: int) -> int:
    if k < 0:
        return 0
    return comb(n + k - 1, k)


def format_monomial(m: Sequence[int]) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"x{i + 1}")
        elif e > 1:
            parts.append(f"x{i + 1}^{e}")
    return "*".join(parts) or "1"


class IdealError(ValueError):
    """Raised for malformed or non-artinian generator data."""


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal of ``K[x1..xn]`` minimally generated in one degree ``d``.

    Generators are stored sorted lex-descending; duplicates are rejected
    rather than silently merged.
    """

    n: int
    d: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        if self.n < 1:
            raise IdealError(f"need at least one variable, got n={self.n}")
        if self.d < 1:
            raise IdealError(f"generation degree must be positive, got d={self.d}")
        gens = [tuple(int(e) for e in g) for g in self.gens]
        if not gens:
            raise IdealError("ideal needs at least one generator")
        for g in gens:
            if len(g) != self.n:
                raise IdealError(f"generator {list(g)} has length {len(g)}, expected {self.n}")
            if min(g) < 0:
                raise IdealError(f"negative exponent in {list(g)}")
            if sum(g) != self.d:
                raise IdealError(f"generator {format_monomial(g)} has degree {sum(g)}, expected {self.d}")
        if len(set(gens)) != len(gens):
            dup = next(g for g in gens if gens.count(g) > 1)
            raise IdealError(f"duplicate generator {format_monomial(dup)}")
        object.__setattr__(self, "gens", tuple(sorted(gens, reverse=True)))

    @classmethod
    def from_gens(cls, gens: Iterable[Sequence[int]], n: int | None = None, d: int | None = None) -> MonomialIdeal:
        gens = [tuple(g) for g in gens]
        if not gens:
            raise IdealError("ideal needs at least one generator")
        if n is None:
            n = len(gens[0])
        if d is None:
            d = sum(gens[0])
        return cls(n, d, tuple(gens))

    @classmethod
    def power_of_maximal(cls, n: int, d: int) -> MonomialIdeal:
        return cls(n, d, tuple(monomials_of_degree(n, d)))

    @property
    def is_artinian(self) -> bool:
        gens = set(self.gens)
        return all(tuple(self.d if k == i else 0 for k in range(self.n)) in gens for i in range(self.n))

    def require_artinian(self) -> None:
        if not self.is_artinian:
            raise IdealError(f"ideal is not artinian: some x_i^{self.d} is missing from the generators")

    def contains(self, m: Sequence[int]) -> bool:
        if sum(m) < self.d:
            return False
        return any(divides(g, m) for g in self.gens)

    def __contains__(self, m: Sequence[int]) -> bool:
        return self.contains(m)

    def permuted(self, perm: Sequence[int]) -> MonomialIdeal:
        """Ideal obtained by sending variable ``i`` to ``perm[i]``."""
        out = []
        for g in self.gens:
            h = [0] * self.n
            for i, e in enumerate(g):
                h[perm[i]] = e
            out.append(tuple(h))
        return MonomialIdeal(self.n, self.d, tuple(out))

    def to_json(self) -> dict:
        return {"n": self.n, "d": self.d, "gens": [list(g) for g in self.gens]}

    def __str__(self) -> str:
        return "(" + ", ".join(format_monomial(g) for g in self.gens) + ")"


def standard_monomials_of(gens: Sequence[Sequence[int]], n: int, k: int) -> list[Monomial]:
    """Degree-``k`` monomials divisible by none of ``gens`` (any degrees)."""
    return [m for m in monomials_of_degree(n, k) if not any(divides(g, m) for g in gens)]


@lru_cache(maxsize=4096)
def _standard_by_degree(ideal: MonomialIdeal, k: int) -> tuple[Monomial, ...]:
    if k < 0:
        return ()
    if k < ideal.d:
        return tuple(monomials_of_degree(ideal.n, k))
    # standard monomials form an order ideal: grow from the previous degree
    prev = _standard_by_degree(ideal, k - 1)
    found = set()
    for u in prev:
        for i in range(ideal.n):
            v = u[:i] + (u[i] + 1,) + u[i + 1:]
            if v not in found and not ideal.contains(v):
                found.add(v)
    return tuple(sorted(found, reverse=True))


def standard_monomials(ideal: MonomialIdeal, k: int) -> list[Monomial]:
    """Monomial basis of ``(S/I)_k`` in lex-descending order."""
    return list(_standard_by_degree(ideal, k))


def hilbert_function(ideal: MonomialIdeal) -> tuple[int, ...]:
    """``(H(0), ..., H(top), 0)`` for an artinian ideal."""
    ideal.require_artinian()
    values = []
    k = 0
    while True:
        h = len(_standard_by_degree(ideal, k))
        values.append(h)
        if h == 0:
            break
        k += 1
    return tuple(values)


def top_degree(ideal: MonomialIdeal) -> int:
    """Largest ``k`` with ``(S/I)_k != 0``."""
    return len(hilbert_function(ideal)) - 2


def hilbert_at(hf: Sequence[int], k: int) -> int:
    if k < 0 or k >= len(hf):
        return 0
    return hf[k]


def socle(ideal: MonomialIdeal) -> dict[int, list[Monomial]]:
    """Monomial socle of ``S/I`` keyed by degree (empty degrees omitted)."""
    hf = hilbert_function(ideal)
    out: dict[int, list[Monomial]] = {}
    for k in range(len(hf) - 1):
        members = []
        for m in _standard_by_degree(ideal, k):
            if all(ideal.contains(m[:i] + (m[i] + 1,) + m[i + 1:]) for i in range(ideal.n)):
                members.append(m)
        if members:
            out[k] = members
    return out


class SupportProfile(NamedTuple):
    min_support: int | None
    support_ok: bool
    hilbert_bound_ok: bool
    hilbert_d: int
    bound: int


def support_profile(ideal: MonomialIdeal, r: int) -> SupportProfile:
    """Smallest support among degree-d survivors versus the ``r``-step bound.

    ``min_support`` is ``None`` when ``(S/I)_d = 0`` (both checks then pass).
    """
    hf = hilbert_function(ideal)
    survivors = _standard_by_degree(ideal, ideal.d)
    min_supp = min((len(support(m)) for m in survivors), default=None)
    h_d = hilbert_at(hf, ideal.d)
    if r + 1 > ideal.n:
        bound = 0
    else:
        bound = comb(ideal.n, r + 1) * hilbert_at(hf, ideal.d - r - 1)
    return SupportProfile(
        min_support=min_supp,
        support_ok=min_supp is None or min_supp >= r + 1,
        hilbert_bound_ok=h_d <= bound,
        hilbert_d=h_d,
        bound=bound,
    )
