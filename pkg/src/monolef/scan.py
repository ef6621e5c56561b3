"""Seeded or exhaustive sweeps over artinian monomial ideals.

Each ideal yields one self-contained JSON record carrying its invariants,
Lefschetz verdicts, hypothesis flags and the theorem-consistency flags
``a``..``i`` (plus ``euler`` and ``mmn``).  A flag is ``true``/``false`` when
its hypothesis applies and ``null`` otherwise; any ``false`` is a violation.
Records come out in input order whatever the worker count, and contain no
timing unless asked for, so a fixed config gives a byte-identical stream.
"""

from __future__ import annotations

import json
import logging
import random
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import comb
from typing import IO, Iterable, Iterator, Sequence

from .conjectures import (
    coordinate_form_sets,
    conjecture39_check,
    ehu_containment,
    exhaustive_ideals,
    pair_sum_forms,
    sample_ideal,
)
from .lefschetz import check_support_chain, power_map_check, slp_check, wlp_check
from .monomials import MonomialIdeal, hilbert_at, hilbert_function, support_profile
from .resolution import betti_table, euler_identity_holds, linear_steps, regularity
from .segments import slp_hypothesis, xy_candidates, xy_hypothesis

log = logging.getLogger(__name__)

CHECKS = ("wlp", "slp", "betti", "ehu", "conj39", "theorem-suite")
THEOREM_FLAGS = ("a", "b", "c", "d", "e", "f", "g", "h", "i", "euler", "mmn")

EXIT_OK = 0
EXIT_VIOLATION = 2
EXIT_COUNTEREXAMPLE = 3


@dataclass
class ScanConfig:
    n_values: Sequence[int]
    d_values: Sequence[int]
    gen_counts: tuple[int, int] | None = None
    samples: int = 0
    exhaustive: bool = False
    seed: int = 0
    checks: Sequence[str] = ("theorem-suite",)
    trials: int = 5
    jobs: int = 1
    timing: bool = False

    def __post_init__(self):
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise ValueError(f"unknown checks {sorted(unknown)}; choose from {CHECKS}")
        if self.gen_counts is not None and self.gen_counts[0] > self.gen_counts[1]:
            raise ValueError(f"empty generator-count range {self.gen_counts}")


def iter_ideals(cfg: ScanConfig) -> Iterator[MonomialIdeal]:
    if cfg.exhaustive:
        for n in cfg.n_values:
            for d in cfg.d_values:
                counts = None if cfg.gen_counts is None else range(cfg.gen_counts[0], cfg.gen_counts[1] + 1)
                yield from exhaustive_ideals(n, d, counts)
        return
    if not cfg.n_values or not cfg.d_values:
        return
    rng = random.Random(cfg.seed)
    for _ in range(cfg.samples):
        n = rng.choice(list(cfg.n_values))
        d = rng.choice(list(cfg.d_values))
        total = comb(n + d - 1, d)
        lo, hi = cfg.gen_counts or (n, total)
        lo, hi = max(lo, n), min(hi, total)
        count = rng.randint(lo, hi) if lo <= hi else n
        yield sample_ideal(n, d, count, rng.getrandbits(32))


def analyze(ideal: MonomialIdeal, checks: Sequence[str] = ("theorem-suite",), seed: int = 0, trials: int = 5) -> dict:
    """One scan record for ``ideal``."""
    checks = set(checks)
    suite = "theorem-suite" in checks
    hf = hilbert_function(ideal)
    top = len(hf) - 2
    B = betti_table(ideal)
    r = linear_steps(B)
    rec: dict = {"ideal": ideal.to_json(), "hilbert": list(hf), "linear_steps": r, "reg": regularity(ideal, B)}
    if "betti" in checks:
        rec["betti"] = B.to_json()["betti"]

    wlp = wlp_check(ideal, witnesses=True)
    wlp_rand = wlp_check(ideal, mode="random", seed=seed, trials=trials)
    rec["wlp"] = {"canonical": wlp.verdict, "random": wlp_rand.verdict, "failure_degrees": wlp.failure_degrees}
    if "slp" in checks or suite:
        slp_can = slp_check(ideal)
        slp_rand = slp_can if slp_can.holds else slp_check(ideal, mode="random", seed=seed, trials=trials)
        rec["slp"] = {"canonical": slp_can.verdict, "random": slp_rand.verdict}

    xy = xy_hypothesis(ideal)
    pair = slp_hypothesis(ideal)
    rec["hypotheses"] = {
        "xy": None if xy is None else [xy.i + 1, xy.j + 1, xy.a, xy.b],
        "xy_all": [[c.i + 1, c.j + 1, c.a, c.b] for c in xy_candidates(ideal) if c.a + c.b >= 1],
        "slp_pair": None if pair is None else [pair[0] + 1, pair[1] + 1],
    }

    counterexamples = []
    if "ehu" in checks:
        # forms l_p..l_n with p - 1 = r
        verdicts = ehu_containment(ideal, r + 1, squared=True, seed=seed, trials=trials)
        status = "holds" if any(verdicts) else "fails-generically"
        rec["ehu_conjecture"] = {"p": r + 1, "trials": verdicts, "status": status}
        if not any(verdicts):
            counterexamples.append("ehu")
    if "conj39" in checks:
        c39 = conjecture39_check(ideal)
        rec["conj39"] = c39.to_json()
        if c39.counterexample:
            counterexamples.append("conj39")

    if suite:
        flags = _theorem_flags(ideal, hf, B, r, top, wlp, wlp_rand, rec["slp"], xy, pair, seed, trials)
        rec["flags"] = flags
        rec["violations"] = [k for k in THEOREM_FLAGS if flags.get(k) is False]
    rec["counterexamples"] = counterexamples
    return rec


def _theorem_flags(ideal, hf, B, r, top, wlp, wlp_rand, slp, xy, pair, seed, trials) -> dict:
    n, d = ideal.n, ideal.d
    flags: dict = dict.fromkeys(THEOREM_FLAGS)
    flags["euler"] = euler_identity_holds(B, hf)
    flags["mmn"] = wlp.holds == wlp_rand.holds
    if r == n - 1:
        flags["a"] = wlp.holds
        flags["b"] = all(ehu_containment(ideal, n, [f], squared=True)[0] for f in pair_sum_forms(n))
    # m^{d+1} ⊆ I, i.e. top degree at most d
    if r >= n - 2 and top <= d:
        flags["c"] = wlp.holds
    if xy is not None:
        e = tuple(int(k in (xy.i, xy.j)) for k in range(n))
        flags["d"] = power_map_check(ideal, xy.a + xy.b, e).holds
    if pair is not None:
        flags["e"] = slp["canonical"] == "holds" or slp["random"] == "holds"
    cell = wlp.cell(d - 1)
    if cell is not None and not cell.surjective:
        flags["f"] = hilbert_at(hf, d) >= d + 1
    prof = support_profile(ideal, r)
    flags["g"] = prof.support_ok and prof.hilbert_bound_ok
    if wlp.witnesses:
        flags["h"] = all(check_support_chain(ideal, w)[0] for w in wlp.witnesses)
    count = n - r
    tried = ehu_containment(ideal, r + 1, seed=seed, trials=trials) if count else []
    for forms in coordinate_form_sets(n, count) if count else [[]]:
        tried += ehu_containment(ideal, r + 1, forms)
    flags["i"] = all(tried)
    return flags


def _analyze_safe(args: tuple) -> dict:
    ideal, checks, seed, trials, timing = args
    start = time.perf_counter()
    try:
        rec = analyze(ideal, checks, seed, trials)
    except Exception as exc:  # recorded, the stream goes on
        log.exception("scan failed on %s", ideal)
        rec = {"ideal": ideal.to_json(), "error": f"{type(exc).__name__}: {exc}", "violations": ["error"], "counterexamples": []}
    if timing:
        rec["seconds"] = round(time.perf_counter() - start, 4)
    return rec


def scan(cfg: ScanConfig) -> Iterator[dict]:
    """Stream records in input order."""
    jobs_in = ((ideal, tuple(cfg.checks), cfg.seed, cfg.trials, cfg.timing) for ideal in iter_ideals(cfg))
    if cfg.jobs <= 1:
        yield from map(_analyze_safe, jobs_in)
        return
    with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
        yield from pool.map(_analyze_safe, jobs_in, chunksize=4)


@dataclass
class ScanSummary:
    records: int = 0
    violations: int = 0
    violation_flags: Counter = field(default_factory=Counter)
    counterexamples: Counter = field(default_factory=Counter)
    wlp_failures: int = 0
    slp_failures_canonical: int = 0
    slp_failures_random: int = 0
    errors: int = 0
    examples: dict = field(default_factory=dict)

    def add(self, rec: dict) -> None:
        self.records += 1
        if "error" in rec:
            self.errors += 1
        if rec.get("violations"):
            self.violations += 1
            self.violation_flags.update(rec["violations"])
            self.examples.setdefault("violation", rec["ideal"])
        for name in rec.get("counterexamples", []):
            self.counterexamples[name] += 1
            self.examples.setdefault(name, rec["ideal"])
        if rec.get("wlp", {}).get("canonical") == "fails":
            self.wlp_failures += 1
        slp = rec.get("slp", {})
        self.slp_failures_canonical += slp.get("canonical") == "fails"
        self.slp_failures_random += slp.get("random") == "fails"

    @property
    def exit_code(self) -> int:
        if self.violations:
            return EXIT_VIOLATION
        if sum(self.counterexamples.values()):
            return EXIT_COUNTEREXAMPLE
        return EXIT_OK

    def to_json(self) -> dict:
        return {
            "records": self.records,
            "violations": self.violations,
            "violation_flags": dict(sorted(self.violation_flags.items())),
            "counterexamples": dict(sorted(self.counterexamples.items())),
            "wlp_failures": self.wlp_failures,
            "slp_failures_canonical": self.slp_failures_canonical,
            "slp_failures_random": self.slp_failures_random,
            "errors": self.errors,
            "examples": self.examples,
            "exit_code": self.exit_code,
        }


def run_scan(cfg: ScanConfig, out: IO[str] | None = None) -> ScanSummary:
    """Run ``cfg``, writing JSONL to ``out`` as records arrive."""
    summary = ScanSummary()
    for rec in scan(cfg):
        summary.add(rec)
        if out is not None:
            out.write(json.dumps(rec) + "\n")
            out.flush()
    return summary


def summarize(records: Iterable[dict]) -> ScanSummary:
    summary = ScanSummary()
    for rec in records:
        summary.add(rec)
    return summary
