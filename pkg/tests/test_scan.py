import io
import json

import pytest

from monolef import scan as scan_mod
from monolef.monomials import MonomialIdeal
from monolef.scan import (
    EXIT_COUNTEREXAMPLE,
    EXIT_OK,
    EXIT_VIOLATION,
    THEOREM_FLAGS,
    ScanConfig,
    analyze,
    iter_ideals,
    run_scan,
    summarize,
)


def jsonl(cfg):
    buf = io.StringIO()
    summary = run_scan(cfg, buf)
    return buf.getvalue(), summary


def test_almost_linear_cubic_record(almost_linear_cubic):
    rec = analyze(almost_linear_cubic, ("theorem-suite", "ehu", "conj39", "betti"))
    assert rec["hilbert"] == [1, 3, 6, 1, 0]
    assert rec["linear_steps"] == 2 and rec["reg"] == 3
    assert {"i": 3, "j": 6, "b": 1} in rec["betti"]
    assert rec["wlp"] == {"canonical": "holds", "random": "holds", "failure_degrees": []}
    flags = rec["flags"]
    assert flags["a"] is True and flags["b"] is True and flags["c"] is True
    assert flags["d"] is True and flags["e"] is None
    assert rec["violations"] == [] and rec["counterexamples"] == []
    assert rec["ehu_conjecture"]["p"] == 3 and rec["ehu_conjecture"]["status"] == "holds"
    assert rec["conj39"]["avector"] == [1, 1, 1]
    assert rec["hypotheses"]["xy"] == [1, 2, 1, 1]


def test_togliatti_record(togliatti):
    rec = analyze(togliatti)
    assert rec["wlp"]["canonical"] == "fails" and rec["wlp"]["failure_degrees"] == [2]
    flags = rec["flags"]
    # r = 1 rules out (a) and (b); x1^2 x2^2 survives, ruling out (c)
    assert flags["a"] is None and flags["c"] is None
    assert flags["h"] is True and flags["g"] is True
    assert set(flags) == set(THEOREM_FLAGS)
    assert rec["violations"] == []


def test_slp_pair_record(slp_pair_ideal):
    rec = analyze(slp_pair_ideal)
    assert rec["hypotheses"]["slp_pair"] == [1, 2]
    assert rec["flags"]["e"] is True


def test_scan_is_byte_reproducible():
    cfg = ScanConfig([3], [2, 3], samples=12, seed=5, checks=("theorem-suite", "conj39"))
    a, sa = jsonl(cfg)
    b, _ = jsonl(cfg)
    assert a == b
    assert len(a.splitlines()) == sa.records == 12
    assert all("seconds" not in json.loads(line) for line in a.splitlines())


def test_parallel_scan_keeps_order():
    cfg = ScanConfig([3], [3], exhaustive=True, checks=("wlp",))
    serial, _ = jsonl(cfg)
    cfg.jobs = 2
    parallel, _ = jsonl(cfg)
    assert serial == parallel


def test_timing_is_opt_in():
    cfg = ScanConfig([2], [2], samples=2, timing=True, checks=("wlp",))
    text, _ = jsonl(cfg)
    assert all("seconds" in json.loads(line) for line in text.splitlines())


def test_empty_ranges():
    assert list(iter_ideals(ScanConfig([], [3], samples=5))) == []
    text, summary = jsonl(ScanConfig([3], [], samples=5))
    assert text == "" and summary.records == 0 and summary.exit_code == EXIT_OK


def test_config_validation():
    with pytest.raises(ValueError):
        ScanConfig([3], [3], checks=("nope",))
    with pytest.raises(ValueError):
        ScanConfig([3], [3], gen_counts=(5, 4))


def test_generator_count_range_is_respected():
    cfg = ScanConfig([3], [3], samples=20, gen_counts=(4, 5), seed=2)
    assert all(4 <= len(I.gens) <= 5 for I in iter_ideals(cfg))


def test_exit_codes_from_records():
    ok = {"ideal": {}, "violations": [], "counterexamples": []}
    bad = {"ideal": {}, "violations": ["a"], "counterexamples": []}
    cex = {"ideal": {}, "violations": [], "counterexamples": ["conj39"]}
    assert summarize([ok, ok]).exit_code == EXIT_OK
    assert summarize([ok, cex]).exit_code == EXIT_COUNTEREXAMPLE
    assert summarize([cex, bad]).exit_code == EXIT_VIOLATION
    summary = summarize([bad, cex]).to_json()
    assert summary["violation_flags"] == {"a": 1} and summary["counterexamples"] == {"conj39": 1}


def test_failures_become_error_records(monkeypatch):
    def boom(*args, **kwargs):
        raise RuntimeError("synthetic")

    monkeypatch.setattr(scan_mod, "analyze", boom)
    text, summary = jsonl(ScanConfig([2], [2], samples=1))
    rec = json.loads(text)
    assert rec["error"] == "RuntimeError: synthetic" and rec["violations"] == ["error"]
    assert summary.errors == 1 and summary.exit_code == EXIT_VIOLATION


def test_exhaustive_three_variable_cubics_are_consistent():
    text, summary = jsonl(ScanConfig([3], [3], exhaustive=True, checks=("theorem-suite", "conj39", "ehu")))
    assert summary.records == 32
    assert summary.violations == 0 and summary.exit_code == EXIT_OK
    assert summary.wlp_failures == 1
    records = [json.loads(line) for line in text.splitlines()]
    failing = [r["ideal"]["gens"] for r in records if r["wlp"]["canonical"] == "fails"]
    assert failing == [MonomialIdeal.from_gens([(3, 0, 0), (0, 3, 0), (0, 0, 3), (1, 1, 1)]).to_json()["gens"]]
