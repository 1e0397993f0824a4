"""Command-line front end.

    permgrowth rate "1,1,3,5;6"
    permgrowth realize 13/5 --problem prop34 --depth 40
    permgrowth antichain A --max-len 16
    permgrowth verify-paper
    permgrowth sample-set --problem sec4 --depth 8
    permgrowth enumerate 7

Data goes to stdout, diagnostics to stderr.  Exit status is 0 when every
check a command performs passes, 1 when one fails, 2 on bad input.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import os
import random
import sys
import time
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any, Sequence

from . import __version__
from . import antichain as ac
from .perm import enumerate_indecomposables
from .realizer import (
    InadmissibleTarget,
    RealizationProblem,
    choice_sequence,
    greedy_violations,
    realize,
)
from .registry import PROBLEMS, problem
from .series import DEFAULT_TOL, GrowthRate, SeqSpec, class_counts, format_poly, growth_rate
from .verify import run_all

DIGITS_ENV = "PERMGROWTH_DIGITS"
MAX_SAMPLE_DEPTH = 20


class UsageError(Exception):
    pass


def default_digits() -> int:
    raw = os.environ.get(DIGITS_ENV, "6")
    try:
        digits = int(raw)
    except ValueError:
        raise UsageError(f"{DIGITS_ENV} must be an integer, got {raw!r}") from None
    if digits < 1:
        raise UsageError(f"{DIGITS_ENV} must be positive")
    return digits


def decimal_str(value: Fraction, digits: int) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def exact(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def render_rate(g: GrowthRate, digits: int) -> dict[str, Any]:
    out = {
        "value": decimal_str(g.mid, digits),
        "width": f"{float(g.width):.3e}",
        "lo": exact(g.lo),
        "hi": exact(g.hi),
    }
    if g.poly is not None:
        out["poly"] = format_poly(g.poly)
    return out


def parse_tol(text: str) -> Fraction:
    try:
        tol = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad tolerance {text!r}") from None
    if tol <= 0:
        raise argparse.ArgumentTypeError("tolerance must be positive")
    return tol


def parse_seq(text: str) -> SeqSpec:
    try:
        return SeqSpec.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def parse_gamma(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad rational target {text!r}") from None


def _pair(args) -> tuple[SeqSpec, SeqSpec, int | None]:
    if args.problem:
        try:
            p = problem(args.problem)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        return p.r, p.t, p.b
    if not (args.r and args.t):
        raise UsageError("give --problem or both --r and --t")
    return parse_seq(args.r), parse_seq(args.t), args.b


def cmd_rate(args) -> tuple[dict, dict, bool]:
    seq = parse_seq(args.seq)
    g = growth_rate(seq, args.tol)
    return {"seq": str(seq), "tol": exact(args.tol)}, render_rate(g, args.digits), True


def cmd_realize(args) -> tuple[dict, dict, bool]:
    r, t, b = _pair(args)
    if b is None:
        raise UsageError("the interval construction needs --b")
    gamma = parse_gamma(args.gamma)
    inputs = {"gamma": exact(gamma), "r": str(r), "t": str(t), "b": b, "depth": args.depth}
    try:
        prob = RealizationProblem(r, t, b, gamma, tol=args.tol)
        cert = realize(prob, args.depth)
    except InadmissibleTarget as exc:
        print(f"error: {exc}", file=sys.stderr)
        return inputs, {"error": str(exc), "lower": render_rate(exc.lower, args.digits),
                        "upper": render_rate(exc.upper, args.digits)}, False
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    issues = greedy_violations(prob, cert)
    for issue in issues:
        print(f"error: {issue}", file=sys.stderr)
    outputs = {
        "chosen": list(cert.chosen),
        "lower": render_rate(cert.lower, args.digits),
        "upper": render_rate(cert.upper, args.digits),
        "width": f"{float(cert.width):.3e}",
        "bracketed": cert.brackets_target(),
    }
    return inputs, outputs, not issues


def cmd_antichain(args) -> tuple[dict, dict, bool]:
    try:
        aset = ac.parse_antichain_set(args.set)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    members = ac.members_up_to(aset, args.max_len)
    inputs = {"set": args.set, "max_len": args.max_len, "n_max": args.n_max}
    outputs: dict[str, Any] = {
        "members": [" ".join(map(str, m)) for m in members],
        "antichain": ac.verify_antichain(members),
    }
    ok = True
    try:
        outputs["proper_counts"] = ac.closure_counts(aset, args.n_max, True, workers=args.workers)
        outputs["total_counts"] = ac.closure_counts(aset, args.n_max, False, workers=args.workers)
    except ac.StabilizationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        ok = False
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if args.require_antichain and not outputs["antichain"]:
        print(f"error: {args.set} is not an antichain up to length {args.max_len}", file=sys.stderr)
        ok = False
    return inputs, outputs, ok


def cmd_verify(args) -> tuple[dict, dict, bool]:
    tol = Fraction(1, 10**12) if args.profile == "tight" else args.tol
    problems = dict(PROBLEMS)
    if args.corrupt:
        problems[args.corrupt] = problem(args.corrupt).corrupted()
    checks = run_all(tol, problems, workers=args.workers)
    for c in checks:
        if not c.passed:
            print(f"error: {c.line()}", file=sys.stderr)
    outputs = {
        "checks": [{"name": c.name, "passed": c.passed, "measured": c.measured, "expected": c.expected}
                   for c in checks],
        "passed": sum(c.passed for c in checks),
        "failed": sum(not c.passed for c in checks),
    }
    return {"profile": args.profile, "tol": exact(tol), "corrupt": args.corrupt}, outputs, outputs["failed"] == 0


def sample_bits(depth: int, count: int | None, seed: int) -> list[str]:
    if count is None or count >= 2**depth:
        return ["".join(b) for b in itertools.product("01", repeat=depth)]
    picks = sorted(random.Random(seed).sample(range(2**depth), count))
    return [format(i, f"0{depth}b") for i in picks]


def cmd_sample_set(args) -> tuple[dict, dict, bool]:
    if not 0 <= args.depth <= MAX_SAMPLE_DEPTH:
        raise UsageError(f"depth must be between 0 and {MAX_SAMPLE_DEPTH}")
    r, t, _ = _pair(args)
    rows = []
    for bits in sample_bits(args.depth, args.count, args.seed):
        try:
            g = growth_rate(choice_sequence(r, t, bits), args.tol)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
        rows.append({"bits": bits, "lo": decimal_str(g.lo, 12), "hi": decimal_str(g.hi, 12),
                     "lo_exact": exact(g.lo), "hi_exact": exact(g.hi)})
    inputs = {"r": str(r), "t": str(t), "depth": args.depth, "count": args.count, "seed": args.seed}
    return inputs, {"rows": rows}, True


def cmd_enumerate(args) -> tuple[dict, dict, bool]:
    if args.seq:
        seq = parse_seq(args.seq)
        return {"seq": str(seq), "n": args.n}, {"class_counts": list(class_counts(seq, args.n))}, True
    try:
        by_len = [enumerate_indecomposables(k) for k in range(1, args.n + 1)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    outputs: dict[str, Any] = {"indecomposable_counts": [len(x) for x in by_len]}
    if args.list:
        outputs["permutations"] = [" ".join(map(str, p)) for p in by_len[-1]]
    return {"n": args.n}, outputs, True


def _flatten(prefix: str, value: Any, out: list[tuple[str, str]]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _flatten(f"{prefix}.{k}" if prefix else k, v, out)
    elif isinstance(value, list) and value and isinstance(value[0], dict):
        for i, v in enumerate(value):
            _flatten(f"{prefix}[{i}]", v, out)
    elif isinstance(value, list):
        out.append((prefix, ", ".join(map(str, value))))
    else:
        out.append((prefix, str(value)))


def emit(report: dict, fmt: str, stream=None) -> None:
    stream = stream or sys.stdout
    if fmt == "json":
        stream.write(json.dumps(report, indent=2) + "\n")
        return
    if fmt == "csv":
        rows = report["outputs"].get("rows")
        buf = io.StringIO()
        if rows:
            writer = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            writer.writeheader()
            writer.writerows(rows)
        else:
            pairs: list[tuple[str, str]] = []
            _flatten("", report["outputs"], pairs)
            writer = csv.writer(buf, lineterminator="\n")
            writer.writerow(["key", "value"])
            writer.writerows(pairs)
        stream.write(buf.getvalue())
        return
    if report["command"] == "verify-paper":
        for c in report["outputs"]["checks"]:
            flag = "PASS" if c["passed"] else "FAIL"
            stream.write(f"[{flag}] {c['name']}: measured {c['measured']}; expected {c['expected']}\n")
        o = report["outputs"]
        stream.write(f"{o['passed']} passed, {o['failed']} failed\n")
        return
    pairs = []
    _flatten("", {"inputs": report["inputs"], "outputs": report["outputs"]}, pairs)
    width = max(len(k) for k, _ in pairs)
    for k, v in pairs:
        stream.write(f"{k.ljust(width)}  {v}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=parse_tol, default=DEFAULT_TOL, help="bracket width (default 1/10^9)")
    common.add_argument("--format", choices=("text", "json", "csv"), help="default text (csv for sample-set)")
    common.add_argument("--parallel", action="store_true", help="spread closure enumeration over processes")

    pairs = argparse.ArgumentParser(add_help=False)
    pairs.add_argument("--problem", choices=sorted(PROBLEMS), help="built-in problem")
    pairs.add_argument("--r", help="lower sequence, e.g. '1,1,3,5;6'")
    pairs.add_argument("--t", help="upper sequence")
    pairs.add_argument("--b", type=int, help="cap of the realizable interval")

    parser = argparse.ArgumentParser(prog="permgrowth", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rate", parents=[common], help="certified growth rate of a sequence")
    p.add_argument("seq")
    p.set_defaults(func=cmd_rate)

    p = sub.add_parser("realize", parents=[common, pairs], help="greedy realization of a target rate")
    p.add_argument("gamma", help="target as a rational, e.g. 13/5 or 2.6")
    p.add_argument("--depth", type=int, default=40)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("antichain", parents=[common], help="members, antichain check and closure counts")
    p.add_argument("set", help=f"one of {', '.join(ac.BUILTIN_FACTORIES)} or 'alpha/beta[/parity];...'")
    p.add_argument("--max-len", type=int, default=16)
    p.add_argument("--n-max", type=int, default=12)
    p.add_argument("--require-antichain", action="store_true")
    p.set_defaults(func=cmd_antichain)

    p = sub.add_parser("verify-paper", parents=[common], help="run the full battery of reference checks")
    p.add_argument("--profile", choices=("default", "tight"), default="default")
    p.add_argument("--corrupt", choices=sorted(PROBLEMS), help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sample-set", parents=[common, pairs], help="rates of choice sequences as CSV")
    p.add_argument("--depth", type=int, default=8)
    p.add_argument("--count", type=int, help="random sample size (default: all 2^depth)")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_sample_set, format_default="csv")

    p = sub.add_parser("enumerate", parents=[common], help="indecomposable counts or class counts")
    p.add_argument("n", type=int)
    p.add_argument("--seq", help="print coefficients of 1/(1 - sum s_n x^n) up to degree n instead")
    p.add_argument("--list", action="store_true", help="also list the indecomposables of length n")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.format is None:
        args.format = getattr(args, "format_default", "text")
    args.workers = (os.cpu_count() or 1) if args.parallel else 1
    started = time.perf_counter()
    try:
        args.digits = default_digits()
        inputs, outputs, ok = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    report = {
        "command": args.command,
        "inputs": inputs,
        "outputs": outputs,
        "timing": {"seconds": round(time.perf_counter() - started, 4)},
        "version": __version__,
    }
    emit(report, args.format)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
