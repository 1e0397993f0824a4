"""Eventually periodic sequences and the growth rate of 1/(1 - sum s_n x^n).

The growth rate of that series is the unique x > 1 with sum s_n x^-n = 1.
All root finding here is bisection in exact rational arithmetic, so every
bracket that comes out is certified by two exact sign checks rather than by
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence, Union

Rational = Union[Fraction, int, str, float]

DEFAULT_TOL = Fraction(1, 10**9)


def as_fraction(value: Rational) -> Fraction:
    """Convert to an exact Fraction; floats go through repr to avoid binary noise."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        return Fraction(repr(value))
    return Fraction(value)


@dataclass(frozen=True)
class SeqSpec:
    """The sequence ``prefix`` followed by ``tail`` repeated forever (1-indexed)."""

    prefix: tuple[int, ...]
    tail: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(v) for v in self.prefix))
        object.__setattr__(self, "tail", tuple(int(v) for v in self.tail))
        if not self.tail:
            raise ValueError("the repeating tail must be nonempty")
        bad = [v for v in self.prefix + self.tail if v < 1]
        if bad:
            raise ValueError(f"sequence entries must be positive integers, got {bad[0]}")

    @classmethod
    def parse(cls, text: str) -> SeqSpec:
        """Read ``"p1,...,pm;q1,...,qd"`` (the prefix may be empty)."""
        if text.count(";") != 1:
            raise ValueError(f"expected exactly one ';' separating prefix and tail in {text!r}")
        head, rep = text.split(";")

        def ints(part: str) -> list[int]:
            out = []
            for tok in part.split(","):
                tok = tok.strip()
                if not tok:
                    continue
                if not tok.isdigit() or int(tok) < 1:
                    raise ValueError(f"bad sequence token {tok!r} in {text!r}")
                out.append(int(tok))
            return out

        return cls(tuple(ints(head)), tuple(ints(rep)))

    @classmethod
    def constant(cls, c: int) -> SeqSpec:
        return cls((), (c,))

    def __str__(self) -> str:
        return ",".join(map(str, self.prefix)) + ";" + ",".join(map(str, self.tail))

    def __getitem__(self, n: int) -> int:
        if n < 1:
            raise IndexError("sequences are indexed from 1")
        m = len(self.prefix)
        if n <= m:
            return self.prefix[n - 1]
        return self.tail[(n - m - 1) % len(self.tail)]

    def terms(self, count: int) -> list[int]:
        return [self[n] for n in range(1, count + 1)]

    def __iter__(self) -> Iterator[int]:
        n = 1
        while True:
            yield self[n]
            n += 1

    @property
    def period(self) -> int:
        return len(self.tail)

    @property
    def bound(self) -> int:
        """The largest entry, i.e. the constant c with every s_n <= c."""
        return max(self.prefix + self.tail)

    def canonical(self) -> SeqSpec:
        """Same sequence with the shortest tail and the shortest prefix."""
        tail = self.tail
        d = len(tail)
        for p in range(1, d + 1):
            if d % p == 0 and tail == tail[:p] * (d // p):
                tail = tail[:p]
                break
        prefix = self.prefix
        while prefix and prefix[-1] == tail[-1]:
            tail = (prefix[-1],) + tail[:-1]
            prefix = prefix[:-1]
        return SeqSpec(prefix, tail)

    def splice(self, head: Sequence[int]) -> SeqSpec:
        """The sequence equal to ``head`` on 1..len(head) and to ``self`` after."""
        n, m = len(head), len(self.prefix)
        if n < m:
            return SeqSpec(tuple(head) + self.prefix[n:], self.tail)
        shift = (n - m) % len(self.tail)
        return SeqSpec(tuple(head), self.tail[shift:] + self.tail[:shift])


def window(*seqs: SeqSpec) -> int:
    """Length of an initial segment that determines pointwise relations.

    Past the longest prefix all the sequences are jointly periodic with period
    lcm of their tails, so comparing the first ``window`` terms decides any
    pointwise statement about all n.
    """
    m = max(len(s.prefix) for s in seqs)
    d = math.lcm(*(s.period for s in seqs))
    return m + d


def dominated(r: SeqSpec, t: SeqSpec) -> bool:
    """``r_n <= t_n`` for every n."""
    return all(r[n] <= t[n] for n in range(1, window(r, t) + 1))


def f_eval(seq: SeqSpec, x: Rational) -> Fraction:
    """Exact value of sum_{n>=1} s_n x^-n for rational x > 1.

    With x = p/q and prefix length m, period d, the sum is

        (A (p^d - q^d) + q^m B) / (p^m (p^d - q^d))

    where A = sum_i prefix_i q^i p^(m-i) and B = sum_j tail_j q^j p^(d-j).
    """
    x = as_fraction(x)
    if x <= 1:
        raise ValueError(f"f_eval needs x > 1, got {x}")
    p, q = x.numerator, x.denominator
    m, d = len(seq.prefix), len(seq.tail)
    a = 0
    for i, s in enumerate(seq.prefix, start=1):
        a += s * q**i * p ** (m - i)
    b = 0
    for j, s in enumerate(seq.tail, start=1):
        b += s * q**j * p ** (d - j)
    geo = p**d - q**d
    return Fraction(a * geo + q**m * b, p**m * geo)


@dataclass(frozen=True)
class GrowthRate:
    """Certified bracket ``[lo, hi]`` around a growth rate.

    ``poly`` lists integer coefficients from the highest degree down; the rate
    is a root of it.  It is ``None`` when no polynomial is tracked (sums of
    rates, for instance).
    """

    lo: Fraction
    hi: Fraction
    poly: tuple[int, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty bracket [{self.lo}, {self.hi}]")

    @classmethod
    def exact(cls, value: Rational) -> GrowthRate:
        v = as_fraction(value)
        return cls(v, v, (v.denominator, -v.numerator))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def brackets(self, value: Rational, slack: Rational = 0) -> bool:
        v, s = as_fraction(value), as_fraction(slack)
        return self.lo - s <= v <= self.hi + s

    def __float__(self) -> float:
        return float(self.mid)

    def __str__(self) -> str:
        return f"{float(self.mid):.6g} (width {float(self.width):.1e})"


def growth_rate(seq: SeqSpec, tol: Rational = DEFAULT_TOL) -> GrowthRate:
    """Bracket the unique x > 1 with f_eval(seq, x) = 1 to width <= tol.

    f is strictly decreasing on (1, oo).  Every entry is at least 1, so
    f(1 + 1/(c+1)) >= c + 1 >= 1, while f(c + 2) <= c/(c+1) < 1.  Bisection
    keeps f(lo) >= 1 >= f(hi) exactly; a midpoint that hits 1 exactly
    collapses the bracket onto the root.
    """
    tol = as_fraction(tol)
    if tol <= 0:
        raise ValueError("tol must be positive")
    c = seq.bound
    lo = 1 + Fraction(1, c + 1)
    hi = Fraction(c + 2)
    while hi - lo > tol:
        mid = (lo + hi) / 2
        v = f_eval(seq, mid)
        if v == 1:
            lo = hi = mid
        elif v > 1:
            lo = mid
        else:
            hi = mid
    return GrowthRate(lo, hi, seq_to_polynomial(seq))


def seq_to_polynomial(seq: SeqSpec) -> tuple[int, ...]:
    """Integer polynomial whose roots in (1, oo) are those of f_eval(seq, x) = 1.

    For the canonical form with prefix length m and period d this is
    x^m (x^d - 1) (1 - f(x)), content-reduced with positive leading coefficient.
    Coefficients are listed from the highest degree down.
    """
    seq = seq.canonical()
    m, d = len(seq.prefix), len(seq.tail)
    deg = m + d
    low = [0] * (deg + 1)  # low[i] is the coefficient of x^i
    low[deg] += 1
    low[m] -= 1
    # -(x^d - 1) * sum_i p_i x^(m-i)
    for i, s in enumerate(seq.prefix, start=1):
        low[m - i + d] -= s
        low[m - i] += s
    for j, s in enumerate(seq.tail, start=1):
        low[d - j] -= s
    coeffs = low[::-1]
    g = math.gcd(*coeffs)
    if coeffs[0] < 0:
        g = -g
    return tuple(c // g for c in coeffs)


def poly_eval(coeffs: Sequence[int], x: Rational) -> Fraction:
    """Horner evaluation of a highest-degree-first coefficient list."""
    x = as_fraction(x)
    acc = Fraction(0)
    for c in coeffs:
        acc = acc * x + c
    return acc


def format_poly(coeffs: Sequence[int]) -> str:
    return ",".join(map(str, coeffs))


CountSequence = tuple[int, ...]


def class_counts(seq: SeqSpec | Sequence[int], N: int) -> CountSequence:
    """Coefficients a_0..a_N of 1/(1 - sum s_n x^n).

    ``seq`` may also be a plain list s_1, s_2, ... long enough to cover N.
    """
    if N < 0:
        raise ValueError("N must be nonnegative")
    s = seq.terms(N) if isinstance(seq, SeqSpec) else list(seq)[:N]
    if len(s) < N:
        raise ValueError(f"need {N} terms, got {len(s)}")
    a = [1]
    for n in range(1, N + 1):
        a.append(sum(s[j - 1] * a[n - j] for j in range(1, n + 1)))
    return tuple(a)


def proximity_bound(eps: Rational, c: int) -> int:
    """A depth m such that sequences bounded by c agreeing on 1..m have rates within eps.

    Both rates are at least 2, so each tail past m contributes at most c 2^-m;
    the difference of tails then stays below eps/(c+1)^2 once
    2^m >= 4 c (c+1)^2 / eps.  Returns the least such m, at least 1.
    """
    eps = as_fraction(eps)
    if eps <= 0:
        raise ValueError("eps must be positive")
    if c < 1:
        raise ValueError("c must be a positive integer")
    target = math.ceil(Fraction(4 * c * (c + 1) ** 2) / eps)
    return max(1, (target - 1).bit_length())
