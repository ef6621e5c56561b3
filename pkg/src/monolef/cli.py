"""``monolef`` command line: one subcommand per computation, JSON on stdout.

Exit codes: 0 success, 1 malformed input, 2 theorem-consistency violation
during ``scan``, 3 conjecture counterexample candidate during ``scan``.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import __version__
from .conjectures import conjecture39_check, ehu_containment
from .lefschetz import NoWitness, check_support_chain, slp_check, wlp_check, wlp_failure_witness
from .monomials import IdealError, MonomialIdeal, hilbert_function, socle
from .parsing import ParseError, load_ideal, parse_forms, parse_gens
from .resolution import betti_table, linear_steps, regularity
from .scan import CHECKS, ScanConfig, run_scan
from .segments import conjecture39_exponent, segment_decomposition, slp_hypothesis, xy_candidates, xy_hypothesis, VacuousHypothesis
from .toeplitz import CONVENTIONS, toeplitz_invertible, toeplitz_matrix, two_var_cross_oracle

SCHEMA = 1


class UsageError(ValueError):
    pass


def _ideal(args) -> MonomialIdeal:
    if args.ideal and args.gens:
        raise UsageError("give either --ideal or --gens, not both")
    if args.ideal:
        ideal = load_ideal(args.ideal)
        if args.n is not None and args.n != ideal.n:
            raise UsageError(f"--n {args.n} disagrees with n={ideal.n} in {args.ideal}")
        return ideal
    if args.gens:
        if args.n is None:
            raise UsageError("--gens needs --n")
        return parse_gens(args.gens, args.n, args.d)
    raise UsageError("an ideal is required: --ideal FILE or --gens STRING --n N")


def _require_seed(args) -> None:
    if getattr(args, "strict", False) and args.seed is None:
        raise UsageError(f"{args.command}: --strict requires an explicit --seed")


def _seed(args) -> int:
    return 0 if args.seed is None else args.seed


def _int_range(text: str) -> list[int]:
    """``"3"``, ``"2-4"`` or ``"2,3,5"``."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part:
            lo, _, hi = part.partition("-")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    return out


def cmd_hilbert(args) -> dict:
    ideal = _ideal(args)
    hf = hilbert_function(ideal)
    return {"ideal": ideal.to_json(), "hilbert": list(hf), "top": len(hf) - 2}


def cmd_betti(args) -> dict:
    ideal = _ideal(args)
    B = betti_table(ideal)
    out = {"ideal": ideal.to_json(), **B.to_json(), "linear_steps": linear_steps(B)}
    if ideal.is_artinian:
        out["reg"] = regularity(ideal, B)
    if args.multigraded:
        out["multigraded"] = [{"i": i, "b": list(b), "beta": v} for (i, b), v in sorted(B.multigraded.items())]
    return out


def cmd_wlp(args) -> dict:
    _require_seed(args)
    ideal = _ideal(args)
    report = wlp_check(ideal, mode=args.mode, seed=_seed(args), trials=args.trials, witnesses=args.witnesses)
    return {"ideal": ideal.to_json(), "hilbert": list(hilbert_function(ideal)), **report.to_json()}


def cmd_slp(args) -> dict:
    _require_seed(args)
    ideal = _ideal(args)
    report = slp_check(ideal, mode=args.mode, seed=_seed(args), trials=args.trials)
    return {"ideal": ideal.to_json(), **report.to_json()}


def cmd_socle(args) -> dict:
    ideal = _ideal(args)
    return {"ideal": ideal.to_json(), "socle": {str(k): [list(m) for m in ms] for k, ms in socle(ideal).items()}}


def cmd_segments(args) -> dict:
    ideal = _ideal(args)
    ideal.require_artinian()
    if args.axes:
        i, j = (int(a) - 1 for a in args.axes.split(","))
        pairs = [(i, j)]
    else:
        pairs = [(i, j) for i in range(ideal.n) for j in range(i + 1, ideal.n)]
    xy = xy_hypothesis(ideal)
    pair = slp_hypothesis(ideal)
    try:
        avec = list(conjecture39_exponent(ideal))
    except VacuousHypothesis:
        avec = None
    return {
        "ideal": ideal.to_json(),
        "segments": [s.to_json() for i, j in pairs for s in segment_decomposition(ideal, i, j)],
        "xy_hypothesis": None if xy is None else {"i": xy.i + 1, "j": xy.j + 1, "a": xy.a, "b": xy.b},
        "xy_candidates": [{"i": c.i + 1, "j": c.j + 1, "a": c.a, "b": c.b} for c in xy_candidates(ideal)],
        "slp_hypothesis": None if pair is None else [pair[0] + 1, pair[1] + 1],
        "conj39_avector": avec,
    }


def cmd_toeplitz(args) -> dict:
    M = toeplitz_matrix(args.n, args.m, args.k, args.convention)
    ok, det = toeplitz_invertible(args.n, args.m, args.k, args.convention)
    out = {"n": args.n, "m": args.m, "k": args.k, "convention": args.convention,
           "matrix": M, "det": str(det), "invertible": ok}
    if 0 <= args.k <= args.n:
        out["cross_oracle"] = two_var_cross_oracle(args.n, args.m, args.k, args.convention)
    return out


def cmd_ehu(args) -> dict:
    ideal = _ideal(args)
    if args.forms:
        forms = parse_forms(args.forms, ideal.n)
        p = ideal.n - len(forms) + 1 if args.p is None else args.p
        verdicts = ehu_containment(ideal, p, forms, squared=args.squared)
    else:
        _require_seed(args)
        p = args.p
        if p is None:
            p = linear_steps(betti_table(ideal)) + 1
        verdicts = ehu_containment(ideal, p, squared=args.squared, seed=_seed(args), trials=args.trials)
    return {"ideal": ideal.to_json(), "p": p, "squared": args.squared, "forms": args.forms,
            "trials": verdicts, "contained": any(verdicts)}


def cmd_conj39(args) -> dict:
    ideal = _ideal(args)
    return {"ideal": ideal.to_json(), **conjecture39_check(ideal).to_json()}


def cmd_witness(args) -> dict:
    ideal = _ideal(args)
    try:
        F = wlp_failure_witness(ideal, args.degree)
    except NoWitness as exc:
        return {"ideal": ideal.to_json(), "j": args.degree, "witness": None, "reason": str(exc)}
    ok, violations = check_support_chain(ideal, F)
    return {"ideal": ideal.to_json(), "j": args.degree, "witness": F.to_json(), "support_chain": ok,
            "violations": [{"mono": list(m), "var": i + 1, "missing_degree": k} for m, i, k in violations]}


def cmd_scan(args) -> int:
    _require_seed(args)
    checks = tuple(c.strip() for c in args.checks.split(",") if c.strip())
    counts = None
    if args.gen_counts:
        lo, _, hi = args.gen_counts.partition("-")
        counts = (int(lo), int(hi or lo))
    cfg = ScanConfig(_int_range(args.n), _int_range(args.d), counts, args.samples, args.exhaustive,
                     _seed(args), checks, args.trials, args.jobs, args.timing)
    if args.out:
        with open(args.out, "w") as fh:
            summary = run_scan(cfg, fh)
        _emit({"schema": SCHEMA, "command": "scan", "summary": summary.to_json()}, args.pretty)
    else:
        summary = run_scan(cfg, sys.stdout)
        _emit({"schema": SCHEMA, "command": "scan", "summary": summary.to_json()}, args.pretty)
    return summary.exit_code


def _pretty_lines(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_pretty_lines(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return lines
    if isinstance(obj, list):
        lines = []
        for v in obj:
            if isinstance(v, dict):
                lines.append(f"{pad}- " + ", ".join(f"{k}={json.dumps(x)}" for k, x in v.items()))
            else:
                lines.extend(_pretty_lines(v, indent))
        return lines
    return [f"{pad}{json.dumps(obj)}"]


def _flat(v) -> bool:
    if isinstance(v, dict):
        return False
    return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x)) for x in v)


def _emit(payload: dict, pretty: bool) -> None:
    if pretty:
        print("\n".join(_pretty_lines(payload)))
    else:
        print(json.dumps(payload))


COMMANDS = {
    "hilbert": cmd_hilbert,
    "betti": cmd_betti,
    "wlp": cmd_wlp,
    "slp": cmd_slp,
    "socle": cmd_socle,
    "segments": cmd_segments,
    "toeplitz": cmd_toeplitz,
    "ehu": cmd_ehu,
    "conj39": cmd_conj39,
    "witness": cmd_witness,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monolef", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"monolef {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--pretty", action="store_true", help="human-readable output with the same fields")
    common.add_argument("--strict", action="store_true", help="require --seed for randomized commands")

    ideal_opts = argparse.ArgumentParser(add_help=False)
    ideal_opts.add_argument("--ideal", metavar="FILE", help='JSON file {"n":..,"d":..,"gens":[[..],..]}')
    ideal_opts.add_argument("--gens", metavar="STR", help='generators, e.g. "x1^3, x2^3, x3^3, x1*x2*x3"')
    ideal_opts.add_argument("--n", type=int, help="number of variables (with --gens)")
    ideal_opts.add_argument("--d", type=int, help="generation degree (optional with --gens)")

    random_opts = argparse.ArgumentParser(add_help=False)
    random_opts.add_argument("--seed", type=int)
    random_opts.add_argument("--trials", type=int, default=5)

    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("hilbert", parents=[common, ideal_opts], help="Hilbert function")
    p = sub.add_parser("betti", parents=[common, ideal_opts], help="graded Betti table, linear steps, regularity")
    p.add_argument("--multigraded", action="store_true")
    for name, help_ in (("wlp", "weak Lefschetz property"), ("slp", "strong Lefschetz property")):
        p = sub.add_parser(name, parents=[common, ideal_opts, random_opts], help=help_)
        p.add_argument("--mode", choices=("canonical", "random"), default="canonical")
        if name == "wlp":
            p.add_argument("--witnesses", action="store_true", help="attach inverse-system kernel forms for failures")
    sub.add_parser("socle", parents=[common, ideal_opts], help="monomial socle by degree")
    p = sub.add_parser("segments", parents=[common, ideal_opts], help="line segments and divisibility hypotheses")
    p.add_argument("--axes", help="1-based pair, e.g. 1,2 (default: all pairs)")
    p = sub.add_parser("toeplitz", parents=[common], help="binomial Toeplitz matrix T_{n,m,k}")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--convention", choices=CONVENTIONS, default="standard")
    p = sub.add_parser("ehu", parents=[common, ideal_opts, random_opts], help="containment m^d in I + (l_p..l_n)[^2]")
    p.add_argument("--forms", help='comma-separated linear forms, e.g. "x-y"; omitted = random general forms')
    p.add_argument("--p", type=int, help="index p (default: n - #forms + 1, or linear steps + 1)")
    p.add_argument("--squared", action="store_true")
    sub.add_parser("conj39", parents=[common, ideal_opts], help="divisibility conjecture on one ideal")
    p = sub.add_parser("witness", parents=[common, ideal_opts], help="kernel form for a WLP failure degree")
    p.add_argument("--degree", type=int, required=True, help="source degree j of the failing map")
    p = sub.add_parser("scan", parents=[common, random_opts], help="sweep ideals; JSONL records then a summary")
    p.add_argument("--n", required=True, help='variable counts, e.g. "3" or "2-4"')
    p.add_argument("--d", required=True, help="generation degrees")
    p.add_argument("--gen-counts", help="generator-count range lo-hi")
    p.add_argument("--samples", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--checks", default="theorem-suite", help=f"comma list from {','.join(CHECKS)}")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", help="JSONL destination (default stdout)")
    p.add_argument("--timing", action="store_true", help="add per-record seconds (breaks byte-reproducibility)")
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "scan":
            return cmd_scan(args)
        payload = COMMANDS[args.command](args)
    except (ParseError, IdealError, UsageError, ValueError, OSError) as exc:
        print(f"monolef {args.command}: error: {exc}", file=sys.stderr)
        return 1
    _emit({"schema": SCHEMA, "command": args.command, **payload}, args.pretty)
    return 0


def main() -> None:
    sys.exit(run())
