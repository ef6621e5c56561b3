"""Readers for ideals and linear forms.

Ideals come either as JSON ``{"n": 3, "d": 3, "gens": [[3,0,0], ...]}`` or as
strings such as ``"x1^3, x2^3, x3^3, x1*x2*x3"``.  Variables are ``x1..xn``;
for ``n <= 3`` the letters ``x, y, z`` are accepted as well.
"""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Sequence

from .monomials import IdealError, MonomialIdeal

LETTERS = {"x": 0, "y": 1, "z": 2}

_FACTOR = re.compile(r"^(x(\d+)|[xyz])(\^(\d+))?$")
_TERM = re.compile(r"([+-]?)([^+-]+)")


class ParseError(ValueError):
    """Malformed ideal or linear-form text; the message names the offending token."""


def _variable(token: str, n: int) -> tuple[int, int]:
    match = _FACTOR.match(token)
    if not match:
        raise ParseError(f"cannot parse factor {token!r}")
    if match.group(2) is not None:
        idx = int(match.group(2)) - 1
        if not 0 <= idx < n:
            raise ParseError(f"variable {token!r} out of range for n={n}")
    else:
        if n > 3:
            raise ParseError(f"letter variable {token!r} only allowed for n <= 3; use x1..x{n}")
        idx = LETTERS[match.group(1)]
        if idx >= n:
            raise ParseError(f"variable {token!r} out of range for n={n}")
    exp = int(match.group(4)) if match.group(4) else 1
    return idx, exp


def parse_monomial(text: str, n: int) -> tuple[int, ...]:
    text = re.sub(r"\s+", "", text)
    if not text:
        raise ParseError("empty monomial")
    exps = [0] * n
    for factor in text.split("*"):
        if not factor:
            raise ParseError(f"empty factor in {text!r}")
        idx, e = _variable(factor, n)
        exps[idx] += e
    return tuple(exps)


def parse_gens(text: str, n: int, d: int | None = None) -> MonomialIdeal:
    gens = [parse_monomial(tok, n) for tok in text.split(",") if tok.strip()]
    if not gens:
        raise ParseError("no generators given")
    try:
        return MonomialIdeal.from_gens(gens, n=n, d=d)
    except IdealError as exc:
        raise ParseError(str(exc)) from exc


def ideal_from_json(data: dict) -> MonomialIdeal:
    try:
        n, d, gens = data["n"], data["d"], data["gens"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"ideal JSON needs keys n, d, gens (missing {exc})") from exc
    try:
        return MonomialIdeal(int(n), int(d), tuple(tuple(int(e) for e in g) for g in gens))
    except (IdealError, TypeError, ValueError) as exc:
        raise ParseError(str(exc)) from exc


def load_ideal(path: str | Path) -> MonomialIdeal:
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from exc
    return ideal_from_json(data)


def parse_linear_form(text: str, n: int) -> tuple[int, ...]:
    """``"x - y"``, ``"2*x1 + x3"`` and the like, integer coefficients only."""
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise ParseError("empty linear form")
    coeffs = [0] * n
    pos = 0
    for match in _TERM.finditer(compact):
        if match.start() != pos:
            raise ParseError(f"unexpected token {compact[pos:match.start()]!r}")
        pos = match.end()
        sign = -1 if match.group(1) == "-" else 1
        body = match.group(2)
        coef = 1
        if "*" in body:
            head, _, body = body.partition("*")
            if not head.isdigit():
                raise ParseError(f"bad coefficient {head!r}")
            coef = int(head)
        else:
            lead = re.match(r"^(\d+)(.*)$", body)
            if lead and lead.group(2):
                coef, body = int(lead.group(1)), lead.group(2)
        idx, e = _variable(body, n)
        if e != 1:
            raise ParseError(f"linear form term {body!r} has degree {e}")
        coeffs[idx] += sign * coef
    if pos != len(compact):
        raise ParseError(f"unexpected token {compact[pos:]!r}")
    if not any(coeffs):
        raise ParseError(f"linear form {text!r} is zero")
    return tuple(coeffs)


def parse_forms(text: str, n: int) -> list[tuple[int, ...]]:
    """Comma-separated list of linear forms."""
    return [parse_linear_form(tok, n) for tok in text.split(",") if tok.strip()]


def format_linear_form(coeffs: Sequence[int]) -> str:
    parts = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        mag = "" if abs(c) == 1 else f"{abs(c)}*"
        parts.append(f"{sign} {mag}x{i + 1}")
    text = " ".join(parts)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]
