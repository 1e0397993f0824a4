"""Greedy realization of target growth rates, choice sequences and juxtaposition.

Given sequences r <= t that agree below some index k and differ by at least
b - 1 from k on, every real between gr(r) and min(b, gr(t)) is the growth rate
of some s with r <= s <= t.  :func:`realize` builds s greedily, one term at a
time, taking the largest value that keeps the r-completed rate at or below the
target.  The target is an exact rational and each comparison is decided
exactly through f_eval(..., gamma) <= 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .series import (
    DEFAULT_TOL,
    GrowthRate,
    Rational,
    SeqSpec,
    as_fraction,
    dominated,
    f_eval,
    growth_rate,
    window,
)


class HypothesisError(ValueError):
    """The pair (r, t) does not satisfy the interval hypotheses."""


class InadmissibleTarget(ValueError):
    """The target lies outside the certified realizable interval."""

    def __init__(self, gamma: Fraction, lower: GrowthRate, upper: GrowthRate):
        self.gamma, self.lower, self.upper = gamma, lower, upper
        super().__init__(
            f"gamma={float(gamma):.6g} is outside the realizable interval "
            f"[{float(lower.lo):.6g}, {float(upper.hi):.6g}]"
        )


def first_difference(r: SeqSpec, t: SeqSpec) -> int | None:
    """Least n with r_n != t_n, or None if the sequences are equal."""
    for n in range(1, window(r, t) + 1):
        if r[n] != t[n]:
            return n
    return None


def check_hypotheses(r: SeqSpec, t: SeqSpec, b: int, k: int | None = None) -> int:
    """Validate r <= t, r = t below k, and t - r >= b - 1 from k on.  Returns k."""
    if b < 1:
        raise HypothesisError("b must be a positive integer")
    if not dominated(r, t):
        raise HypothesisError(f"{r} is not dominated by {t}")
    if k is None:
        k = first_difference(r, t) or 1
    last = max(k, window(r, t)) + math.lcm(r.period, t.period)
    for n in range(1, last + 1):
        if n < k and r[n] != t[n]:
            raise HypothesisError(f"r and t differ at n={n} < k={k}")
        if n >= k and t[n] - r[n] < b - 1:
            raise HypothesisError(f"t_{n} - r_{n} = {t[n] - r[n]} < b - 1 = {b - 1}")
    return k


def interval_endpoints(r: SeqSpec, t: SeqSpec, b: int, tol: Rational = DEFAULT_TOL
                       ) -> tuple[GrowthRate, GrowthRate]:
    """(gr(r), min(b, gr(t))); the upper end is the exact rate b when the cap binds."""
    check_hypotheses(r, t, b)
    lower = growth_rate(r, tol)
    if b <= 1 or f_eval(t, b) > 1:
        return lower, GrowthRate.exact(b)
    return lower, growth_rate(t, tol)


@dataclass(frozen=True)
class RealizationProblem:
    r: SeqSpec
    t: SeqSpec
    b: int
    gamma: Fraction
    k: int | None = None
    tol: Fraction = DEFAULT_TOL

    def __post_init__(self):
        object.__setattr__(self, "gamma", as_fraction(self.gamma))
        object.__setattr__(self, "tol", as_fraction(self.tol))
        object.__setattr__(self, "k", check_hypotheses(self.r, self.t, self.b, self.k))

    def endpoints(self) -> tuple[GrowthRate, GrowthRate]:
        return interval_endpoints(self.r, self.t, self.b, self.tol)

    def check_target(self) -> None:
        lower, upper = self.endpoints()
        if not lower.lo - self.tol <= self.gamma <= upper.hi + self.tol or self.gamma > self.b:
            raise InadmissibleTarget(self.gamma, lower, upper)


@dataclass(frozen=True)
class RealizationCertificate:
    gamma: Fraction
    chosen: tuple[int, ...]
    lower: GrowthRate
    upper: GrowthRate

    @property
    def N(self) -> int:
        return len(self.chosen)

    @property
    def width(self) -> Fraction:
        return self.upper.hi - self.lower.lo

    def brackets_target(self) -> bool:
        return self.lower.lo <= self.gamma <= self.upper.hi


def realize(problem: RealizationProblem, N: int) -> RealizationCertificate:
    """Run the greedy choice for n = 1..N and certify the target between two completions.

    At step n the candidate value v contributes linearly to f at gamma, so the
    largest admissible v is computed directly from the slack 1 - f.  When gamma
    sits (within tolerance) just below gr(r), no value is admissible and the
    greedy falls back to r_n; otherwise an empty choice is a bug.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    problem.check_target()
    r, t, gamma = problem.r, problem.t, problem.gamma
    below_r = f_eval(r, gamma) > 1
    chosen: list[int] = []
    for n in range(1, N + 1):
        base = f_eval(r.splice(chosen + [r[n]]), gamma)
        if base > 1:
            if not below_r:
                raise AssertionError(f"greedy step {n} has no admissible value for gamma={gamma}")
            v = r[n]
        else:
            v = min(t[n], r[n] + math.floor((1 - base) * gamma**n))
        chosen.append(v)
    lower = growth_rate(r.splice(chosen), problem.tol)
    upper = growth_rate(t.splice(chosen), problem.tol)
    return RealizationCertificate(gamma, tuple(chosen), lower, upper)


def greedy_violations(problem: RealizationProblem, cert: RealizationCertificate) -> list[str]:
    """Recheck a certificate from scratch; returns human-readable failures."""
    r, t, gamma = problem.r, problem.t, problem.gamma
    out = []
    s = list(cert.chosen)
    for n, v in enumerate(s, start=1):
        if not r[n] <= v <= t[n]:
            out.append(f"s_{n}={v} outside [{r[n]}, {t[n]}]")
            continue
        if v < t[n]:
            bumped = r.splice(s[: n - 1] + [v + 1])
            if f_eval(bumped, gamma) <= 1:
                out.append(f"s_{n}={v} is not maximal")
    if not cert.brackets_target():
        out.append("certificate does not bracket gamma")
    return out


def difference_positions(r: SeqSpec, t: SeqSpec) -> tuple[list[int], list[int], int, int]:
    """Indices where r and t differ: (within the joint prefix, within one period, M, D)."""
    m = max(len(r.prefix), len(t.prefix))
    d = math.lcm(r.period, t.period)
    head = [n for n in range(1, m + 1) if r[n] != t[n]]
    cyc = [n for n in range(m + 1, m + d + 1) if r[n] != t[n]]
    return head, cyc, m, d


def choice_sequence(r: SeqSpec, t: SeqSpec, bits: str) -> SeqSpec:
    """Take t at the j-th difference index when bit j is 1 and r elsewhere.

    Bits are reused cyclically over the infinitely many difference indices,
    which keeps the result eventually periodic.
    """
    if any(ch not in "01" for ch in bits):
        raise ValueError(f"bit string may only contain 0 and 1, got {bits!r}")
    if not dominated(r, t):
        raise ValueError(f"{r} is not dominated by {t}")
    head, cyc, m, d = difference_positions(r, t)
    L = len(bits)
    if not cyc:
        if L > len(head) and head:
            raise ValueError(f"{L} bits but only {len(head)} positions where r and t differ")
        if not head or L == 0:
            return r
        picks = dict(zip(head, bits))
        values = [t[n] if picks.get(n) == "1" else r[n] for n in range(1, m + 1)]
        return SeqSpec(values, [r[n] for n in range(m + 1, m + r.period + 1)])
    if L == 0:
        return r
    span = d * (L // math.gcd(len(cyc), L))
    values = []
    j = 0
    for n in range(1, m + span + 1):
        if r[n] != t[n]:
            values.append(t[n] if bits[j % L] == "1" else r[n])
            j += 1
        else:
            values.append(r[n])
    return SeqSpec(values[:m], values[m:])


def choice_rate(r: SeqSpec, t: SeqSpec, bits: str, tol: Rational = DEFAULT_TOL) -> GrowthRate:
    return growth_rate(choice_sequence(r, t, bits), tol)


def juxtapose_rate(g1: GrowthRate, g2: GrowthRate) -> GrowthRate:
    """Rate of a horizontal juxtaposition: the two rates add."""
    return GrowthRate(g1.lo + g2.lo, g1.hi + g2.hi)
