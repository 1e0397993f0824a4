"""Built-in interval problems and their expected reference values.

Each problem pairs a lower sequence r with an upper sequence t, the cap b of
the interval construction, and the antichain set whose closure produces both
sequences (r counts proper patterns, t counts all patterns).
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from .series import SeqSpec


@dataclass(frozen=True)
class ReferenceProblem:
    name: str
    r: SeqSpec
    t: SeqSpec
    b: int | None
    expected: tuple[Fraction, Fraction]
    lower_set: str
    upper_set: str
    note: str = ""

    def corrupted(self) -> ReferenceProblem:
        """Copy with r_4 bumped by one; used as a negative control."""
        prefix = list(self.r.prefix)
        prefix[3] += 1
        return replace(self, r=SeqSpec(prefix, self.r.tail))


def _p(text: str) -> SeqSpec:
    return SeqSpec.parse(text)


def _q(text: str) -> Fraction:
    return Fraction(text)


LAMBDA = _q("2.48187")
XI = _q("2.30524")
ZETA = _q("2.32331")
# Reference values are rounded to 5 decimals.
REF_TOL = Fraction(5, 10**5)

PROBLEMS: dict[str, ReferenceProblem] = {
    p.name: p
    for p in [
        ReferenceProblem("prop34", _p("1,1,3,5;6"), _p("1,1,3,13;8"), 3, (LAMBDA, _q("2.69284")),
                         "A", "A-prime"),
        ReferenceProblem("prop35a", _p("1,1,3,13;8"), _p("1,1,3,13,71;11"), 4,
                         (_q("2.69284"), _q("3.03024")), "A1", "A1"),
        # The upper sequence keeps the length-5 count 71.  Dropping it
        # (1,1,3,13,461;11) would give a rate near 3.8376; the closure of A2
        # is 1,1,3,13,71,461,11,... and lands on 3.41108.
        ReferenceProblem("prop35b", _p("1,1,3,13,71;8"), _p("1,1,3,13,71,461;11"), 4,
                         (_q("3.02440"), _q("3.41108")), "A2", "A2",
                         note="upper sequence keeps the length-5 count 71"),
        ReferenceProblem("prop35c", _p("1,1,3,13,71,461;8"), _p("1,1,3,13,71,461,3447;11"), 4,
                         (_q("3.41035"), _q("3.79450")), "A3", "A3"),
        ReferenceProblem("sec4", _p("1,1,2,3;4"), _p("1,1,2,3;5,4"), None, (XI, ZETA),
                         "U12-12-odd", "U12-12-odd"),
    ]
}

POLYNOMIALS = {
    "1,1,3,5;6": (1, -2, 0, -2, -2, -1),
    "1,1,3,13;8": (1, -2, 0, -2, -10, 5),
    "1,1,2,3;4": (1, -2, 0, -1, -1, -1),
    "1,1,2,3;5,4": (1, -1, -2, -1, -2, -3, -1),
}

INDECOMPOSABLE_COUNTS = (1, 1, 3, 13, 71, 461, 3447)

CLOSURE_SEQUENCES = {
    # (set name, proper) -> leading terms; later terms repeat the stated tail
    ("A", True): ((1, 1, 3, 5), (6,)),
    ("A", False): ((1, 1, 3, 5), (8,)),
    ("A-prime", False): ((1, 1, 3, 13), (8,)),
    ("A-triple", True): ((1, 1, 3, 7), (8,)),
    ("U12-12-odd", True): ((1, 1, 2, 3), (4,)),
}

A_LENGTH8_PATTERNS = (
    "4 1 2 6 3 8 5 7",
    "4 2 1 6 3 8 5 7",
    "2 4 1 6 3 7 8 5",
    "3 1 5 2 8 4 6 7",
    "3 1 5 2 7 4 8 6",
    "2 4 1 6 3 8 5 7",
)


def problem(name: str) -> ReferenceProblem:
    try:
        return PROBLEMS[name]
    except KeyError:
        raise ValueError(f"unknown problem {name!r}; known: {', '.join(PROBLEMS)}") from None
