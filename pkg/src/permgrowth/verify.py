"""Check every reference value of the interval construction in one pass."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping

from . import antichain as ac
from .perm import (
    Permutation,
    contains,
    enumerate_indecomposables,
    parse_permutation,
    standardize,
    sum_decompose,
    sum_of,
)
from .realizer import (
    InadmissibleTarget,
    RealizationProblem,
    choice_rate,
    greedy_violations,
    interval_endpoints,
    juxtapose_rate,
    realize,
)
from .registry import (
    CLOSURE_SEQUENCES,
    A_LENGTH8_PATTERNS,
    INDECOMPOSABLE_COUNTS,
    POLYNOMIALS,
    REF_TOL,
    PROBLEMS,
    ReferenceProblem,
)
from .series import DEFAULT_TOL, GrowthRate, SeqSpec, class_counts, f_eval, growth_rate, proximity_bound, seq_to_polynomial


@dataclass
class Check:
    name: str
    passed: bool
    measured: str
    expected: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: measured {self.measured}; expected {self.expected}"


def _near(g: GrowthRate, ref: Fraction) -> bool:
    return g.brackets(ref, REF_TOL)


def _dec(g: GrowthRate) -> str:
    return f"{float(g.mid):.6f}"


def check_reference_rates(tol: Fraction, problems: Mapping[str, ReferenceProblem]) -> list[Check]:
    out = []
    for p in problems.values():
        for seq, ref in ((p.r, p.expected[0]), (p.t, p.expected[1])):
            g = growth_rate(seq, tol)
            out.append(Check(f"{p.name} rate of {seq}", _near(g, ref) and g.width <= tol,
                             _dec(g), f"{float(ref):.5f} +/- 5e-5"))
        if p.b is not None:
            lower, upper = interval_endpoints(p.r, p.t, p.b, tol)
            ok = _near(lower, p.expected[0]) and _near(upper, p.expected[1])
            out.append(Check(f"{p.name} interval endpoints (b={p.b})", ok,
                             f"[{_dec(lower)}, {_dec(upper)}]",
                             f"[{float(p.expected[0]):.5f}, {float(p.expected[1]):.5f}]"))
    return out


def check_polynomials() -> list[Check]:
    out = []
    for text, poly in POLYNOMIALS.items():
        got = seq_to_polynomial(SeqSpec.parse(text))
        out.append(Check(f"polynomial of {text}", got == poly, str(got), str(poly)))
    return out


def check_constant_law(tol: Fraction) -> list[Check]:
    out = []
    for c in range(1, 7):
        g = growth_rate(SeqSpec((c,), (c,)), tol)
        out.append(Check(f"constant sequence {c} has rate {c + 1}",
                         g.brackets(c + 1) and g.width <= tol and f_eval(SeqSpec.constant(c), c + 1) == 1,
                         f"[{float(g.lo):.10f}, {float(g.hi):.10f}]", str(c + 1)))
    return out


def check_indecomposables() -> list[Check]:
    got = tuple(len(enumerate_indecomposables(n)) for n in range(1, 8))
    return [Check("sum-indecomposable counts n=1..7", got == INDECOMPOSABLE_COUNTS, str(got), str(INDECOMPOSABLE_COUNTS))]


def _expand(lead: tuple[int, ...], tail: tuple[int, ...], n: int) -> list[int]:
    return SeqSpec(lead, tail).terms(n)


def check_closures(problems: Mapping[str, ReferenceProblem], n_max: int = 12, workers: int = 1) -> list[Check]:
    out = []
    for (name, proper), (lead, tail) in CLOSURE_SEQUENCES.items():
        want = _expand(lead, tail, n_max)
        try:
            got = ac.closure_counts(ac.builtin_set(name), n_max, proper, workers=workers)
        except ac.StabilizationError as exc:
            out.append(Check(f"closure of {name}", False, str(exc), str(want)))
            continue
        kind = "proper" if proper else "total"
        out.append(Check(f"{kind} closure counts of {name}", got == want, str(got), str(want)))
    known = {parse_permutation(s) for s in A_LENGTH8_PATTERNS}
    eight = {p for p in ac.closure_patterns(ac.builtin_set("A"), 8, proper=True) if len(p) == 8}
    out.append(Check("the six length-8 proper patterns of A", eight == known and len(eight) == 6,
                     f"{len(eight)} patterns", "6 known patterns"))
    # the registry sequences must be exactly what the antichain closures produce
    for p in problems.values():
        r_got = ac.closure_counts(ac.builtin_set(p.lower_set), n_max, True, workers=workers)
        t_got = ac.closure_counts(ac.builtin_set(p.upper_set), n_max, False, workers=workers)
        ok = r_got == p.r.terms(n_max) and t_got == p.t.terms(n_max)
        out.append(Check(f"{p.name} sequences from closures of {p.lower_set}/{p.upper_set}", ok,
                         f"r={r_got} t={t_got}", f"r={p.r.terms(n_max)} t={p.t.terms(n_max)}"))
    return out


def check_antichains(max_len: int = 16) -> list[Check]:
    out = []
    for name in ("A", "A-prime", "A-triple"):
        members = ac.members_up_to(ac.builtin_set(name), max_len)
        out.append(Check(f"{name} is an antichain up to length {max_len}", ac.verify_antichain(members),
                         f"{len(members)} members", "no comparable pair"))
    members = ac.members_up_to(ac.builtin_set("A"), 10)
    poisoned = members + [standardize(members[-1][1:])]
    out.append(Check("injected comparable pair is detected", not ac.verify_antichain(poisoned),
                     str(ac.verify_antichain(poisoned)), "False"))
    return out


def realization_targets(count: int = 20, seed: int = 34) -> list[Fraction]:
    rng = random.Random(seed)
    return sorted(Fraction(rng.randint(249000, 269000), 100000) for _ in range(count))


def check_realization(problems: Mapping[str, ReferenceProblem], tol: Fraction) -> list[Check]:
    p = problems["prop34"]
    bad = []
    widest = Fraction(0)
    for gamma in realization_targets():
        prob = RealizationProblem(p.r, p.t, p.b, gamma, tol=tol)
        try:
            short, long = realize(prob, 20), realize(prob, 40)
        except InadmissibleTarget as exc:
            bad.append(f"{gamma}: {exc}")
            continue
        widest = max(widest, long.width)
        issues = greedy_violations(prob, long)
        if long.width >= Fraction(1, 1000):
            issues.append("bracket too wide")
        if not (short.lower.lo - tol <= long.lower.lo and long.upper.hi <= short.upper.hi + tol):
            issues.append("brackets not nested")
        if issues:
            bad.append(f"{gamma}: {'; '.join(issues)}")
    return [Check("greedy realization of 20 targets in [2.49, 2.69]", not bad,
                  "; ".join(bad) or f"max width {float(widest):.2e}", "all bracketed, width < 1e-3, nested")]


def check_perfect_set(problems: Mapping[str, ReferenceProblem], tol: Fraction) -> list[Check]:
    p = problems["sec4"]
    xi, zeta = growth_rate(p.r, tol), growth_rate(p.t, tol)
    rates = {bits: choice_rate(p.r, p.t, bits, tol) for bits in (
        "".join(b) for b in itertools.product("01", repeat=8))}
    slack = Fraction(1, 10**6)
    inside = all(xi.lo - slack <= g.lo and g.hi <= zeta.hi + slack for g in rates.values())
    monotone = all(
        rates[b].hi >= rates[a].lo
        for a in rates for i in range(8) if a[i] == "0"
        for b in [a[:i] + "1" + a[i + 1:]]
    )
    eps = Fraction(1, 100)
    m = proximity_bound(eps, 5)
    close = True
    rng = random.Random(4)
    for _ in range(40):
        stem = "".join(rng.choice("01") for _ in range(12))
        a = stem + "".join(rng.choice("01") for _ in range(4))
        b = stem + "".join(rng.choice("01") for _ in range(4))
        ga, gb = choice_rate(p.r, p.t, a, tol), choice_rate(p.r, p.t, b, tol)
        close &= max(ga.hi, gb.hi) - min(ga.lo, gb.lo) < eps
    # 12 shared bits pin the sequences through index 5 + 2*11 + 1 = 28 >= m
    return [
        Check("all 2^8 choice rates lie in [xi, zeta]", inside,
              f"[{min(float(g.lo) for g in rates.values()):.6f}, {max(float(g.hi) for g in rates.values()):.6f}]",
              f"[{_dec(xi)}, {_dec(zeta)}]"),
        Check("choice rates are monotone under bitwise dominance", monotone, str(monotone), "True"),
        Check(f"shared 12-bit prefixes stay within eps=1/100 (m={m} <= 28)", close and m <= 28, str(close), "True"),
    ]


def check_series_laws(problems: Mapping[str, ReferenceProblem], tol: Fraction) -> list[Check]:
    seqs = {str(s): s for p in problems.values() for s in (p.r, p.t)}
    super_ok = all(
        a[i + j] >= a[i] * a[j]
        for s in seqs.values() for a in [class_counts(s, 30)]
        for i in range(31) for j in range(31 - i)
    )
    rng = random.Random(10)
    mono = True
    for _ in range(100):
        s = rng.choice(list(seqs.values()))
        x = 1 + Fraction(rng.randint(1, 10**6), 10**5)
        y = x + Fraction(rng.randint(1, 10**6), 10**6)
        mono &= f_eval(s, x) > f_eval(s, y)
    cert = all(f_eval(s, g.lo) >= 1 >= f_eval(s, g.hi) for s in seqs.values() for g in [growth_rate(s, tol)])
    return [
        Check("class counts are supermultiplicative to N=30", super_ok, str(super_ok), "True"),
        Check("f is strictly decreasing on 100 random pairs", mono, str(mono), "True"),
        Check("f(lo) >= 1 >= f(hi) for every emitted rate", cert, str(cert), "True"),
    ]


def check_juxtaposition(problems: Mapping[str, ReferenceProblem], tol: Fraction) -> list[Check]:
    lam = growth_rate(problems["prop34"].r, tol)
    g = lam
    ok = True
    for k in range(1, 6):
        g = juxtapose_rate(g, GrowthRate.exact(1))
        ok &= g.lo == lam.lo + k and g.hi == lam.hi + k and g.brackets(Fraction(248187, 100000) + k, REF_TOL)
    # consecutive intervals overlap and the last one passes lambda + 1
    ends = [interval_endpoints(p.r, p.t, p.b, tol) for p in problems.values() if p.b is not None]
    chain = all(a[1].hi >= b[0].lo for a, b in zip(ends, ends[1:])) and ends[-1][1].lo > lam.hi + 1
    return [
        Check("lambda + k for k = 1..5 by juxtaposition with Av(21)", ok, f"{float(g.mid):.6f}", "lambda + 5"),
        Check("interval chain covers [lambda, lambda + 1]", chain,
              " ".join(f"[{_dec(a)},{_dec(b)}]" for a, b in ends), "overlapping, ending above lambda + 1"),
    ]


def check_perm_laws(max_order: int = 6, max_round_trip: int = 8) -> list[Check]:
    perms = [Permutation(p) for n in range(1, max_order + 1) for p in itertools.permutations(range(1, n + 1))]
    above: dict[Permutation, set[Permutation]] = {
        p: {q for q in perms if len(p) <= len(q) and contains(p, q)} for p in perms
    }
    reflexive = all(p in above[p] for p in perms)
    antisym = all(p == q for p in perms for q in above[p] if p in above[q])
    transitive = all(above[q] <= above[p] for p in perms for q in above[p])
    trip = all(
        sum_of(sum_decompose(Permutation(p))) == p
        for n in range(1, max_round_trip + 1) for p in itertools.permutations(range(1, n + 1))
    )
    return [
        Check(f"containment is a partial order on lengths <= {max_order}", reflexive and antisym and transitive,
              f"reflexive={reflexive} antisymmetric={antisym} transitive={transitive}", "all True"),
        Check(f"sum decomposition round trip on lengths <= {max_round_trip}", trip, str(trip), "True"),
    ]


def run_all(tol: Fraction = DEFAULT_TOL, problems: Mapping[str, ReferenceProblem] = PROBLEMS,
            workers: int = 1) -> list[Check]:
    sections: Iterable[Callable[[], list[Check]]] = (
        lambda: check_reference_rates(tol, problems),
        check_polynomials,
        lambda: check_constant_law(tol),
        check_indecomposables,
        lambda: check_closures(problems, workers=workers),
        check_antichains,
        lambda: check_realization(problems, tol),
        lambda: check_perfect_set(problems, tol),
        lambda: check_series_laws(problems, tol),
        lambda: check_juxtaposition(problems, tol),
        check_perm_laws,
    )
    return [c for section in sections for c in section()]
