"""Increasing oscillations, the U^{alpha,beta} antichains and their closures.

Family members are indexed by k, the length of the underlying oscillation.
Odd k uses the least k entries of the increasing oscillating sequence
4,1,6,3,8,5,...; even k uses its first k entries.  Families start at k = 3,
where the least three entries 4,1,3 give 312; this is the only convention
that yields two members of every length n >= 5 in U^{12,12} u U^{21,12}.
"""

from __future__ import annotations

import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Literal, Sequence

from .perm import (
    Permutation,
    contains,
    enumerate_indecomposables,
    inflate,
    is_sum_indecomposable,
    parse_permutation,
    standardize,
    sum_decompose,
)

Parity = Literal["all", "even", "odd"]

CLOSURE_BOUND = 12
FIRST_K = 3
# Counts of length n use members up to n + HORIZON and are rechecked at n + HORIZON + 2.
HORIZON = 6


class StabilizationError(RuntimeError):
    """Closure counts changed when the member horizon was enlarged."""


def oscillating_sequence(length: int) -> list[int]:
    """First ``length`` terms of 4,1,6,3,8,5,...,2i+2,2i-1,..."""
    out: list[int] = []
    i = 1
    while len(out) < length:
        out += [2 * i + 2, 2 * i - 1]
        i += 1
    return out[:length]


def _oscillation(k: int) -> Permutation:
    seq = oscillating_sequence(2 * k + 2)
    if k % 2 == 0:
        return standardize(seq[:k])
    least = set(sorted(seq)[:k])
    return standardize([v for v in seq if v in least])


def oscillation_sigma(k: int) -> Permutation:
    """The increasing oscillation sigma_k (k >= 4); it is simple and sum indecomposable."""
    if k < 4:
        raise ValueError(f"sigma_k is defined for k >= 4, got {k}")
    return _oscillation(k)


@dataclass(frozen=True)
class UFamilySpec:
    alpha: Permutation
    beta: Permutation

    def __post_init__(self):
        object.__setattr__(self, "alpha", Permutation(self.alpha))
        object.__setattr__(self, "beta", Permutation(self.beta))
        if len(self.alpha) < 2 or len(self.beta) < 2:
            raise ValueError("U^{alpha,beta} needs alpha and beta of length at least 2")

    def __str__(self) -> str:
        return f"U^{{{self.alpha},{self.beta}}}"


def u_member(spec: UFamilySpec, k: int) -> Permutation:
    """Inflate the least entry of sigma_k by alpha and another entry by beta.

    The second entry is the greatest one for even k and the rightmost one for
    odd k.  Accepts k >= 3 (see the module docstring).
    """
    if k < FIRST_K:
        raise ValueError(f"U members are defined for k >= {FIRST_K}, got {k}")
    sigma = _oscillation(k)
    parts: list[Sequence[int]] = [(1,)] * k
    parts[sigma.index(1)] = spec.alpha
    parts[sigma.index(k) if k % 2 == 0 else k - 1] = spec.beta
    return inflate(sigma, parts)


@dataclass(frozen=True)
class AntichainSet:
    """Union of U families (each with a parity filter on k) and explicit extras.

    Despite the name, sets with extras of several lengths (A1..A3) are not
    antichains; :func:`verify_antichain` will say so.
    """

    generators: tuple[tuple[UFamilySpec, Parity], ...] = ()
    extras: tuple[Permutation, ...] = ()
    label: str = ""

    def __post_init__(self):
        for _, parity in self.generators:
            if parity not in ("all", "even", "odd"):
                raise ValueError(f"unknown parity filter {parity!r}")
        for p in self.extras:
            if not is_sum_indecomposable(p):
                raise ValueError(f"extra {p} is not sum indecomposable")


def members_up_to(aset: AntichainSet, max_len: int) -> list[Permutation]:
    """All members of length <= max_len, sorted by length then lexicographically."""
    if max_len < 1:
        raise ValueError("max_len must be at least 1")
    found = {p for p in aset.extras if len(p) <= max_len}
    for spec, parity in aset.generators:
        extra = len(spec.alpha) + len(spec.beta) - 2
        for k in range(FIRST_K, max_len - extra + 1):
            if parity == "even" and k % 2 or parity == "odd" and k % 2 == 0:
                continue
            found.add(u_member(spec, k))
    return sorted(found, key=lambda p: (len(p), p))


def verify_antichain(members: Sequence[Sequence[int]]) -> bool:
    """True iff no listed member is contained in a different listed member.

    A repeated entry counts as a comparable pair.
    """
    for i, p in enumerate(members):
        for j, q in enumerate(members):
            if i != j and len(p) <= len(q) and contains(p, q):
                return False
    return True


@lru_cache(maxsize=1 << 16)
def indecomposable_subpatterns(pi: Permutation) -> frozenset[Permutation]:
    """Every sum-indecomposable permutation properly contained in ``pi``.

    An indecomposable pattern of a sum lies inside one summand, so it is enough
    to delete one point at a time and recurse into the sum components of what
    is left.  Decomposable permutations never have to be stored.
    """
    found: set[Permutation] = set()
    if len(pi) == 1:
        return frozenset()
    for i in range(len(pi)):
        for comp in sum_decompose(standardize(pi[:i] + pi[i + 1 :])):
            if comp not in found:
                found.add(comp)
                found |= indecomposable_subpatterns(comp)
    return frozenset(found)


def _closure_of_members(members: Sequence[Permutation], workers: int) -> tuple[set, set]:
    if workers > 1 and len(members) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            below = list(pool.map(indecomposable_subpatterns, members))
    else:
        below = [indecomposable_subpatterns(m) for m in members]
    proper: set[Permutation] = set().union(*below) if below else set()
    total = proper | {m for m in members if is_sum_indecomposable(m)}
    return proper, total


def _counts(pats: Iterable[Permutation], n_max: int) -> list[int]:
    out = [0] * n_max
    for p in pats:
        if len(p) <= n_max:
            out[len(p) - 1] += 1
    return out


def closure_patterns(aset: AntichainSet, n_max: int, proper: bool, horizon: int | None = None,
                     workers: int = 1) -> list[Permutation]:
    """The sum-indecomposable patterns of length <= n_max behind :func:`closure_counts`."""
    h = n_max + HORIZON if horizon is None else horizon
    below, total = _closure_of_members(members_up_to(aset, h), workers)
    pats = below if proper else total
    return sorted((p for p in pats if len(p) <= n_max), key=lambda p: (len(p), p))


def closure_counts(aset: AntichainSet, n_max: int, proper: bool, *, bound: int = CLOSURE_BOUND,
                   horizon: int | None = None, workers: int = 1) -> list[int]:
    """Entry n-1 counts sum-indecomposable length-n permutations in some member.

    With ``proper`` a pattern must be properly contained in a member.  Members
    up to length ``n_max + 6`` are used, and the counts must not change when
    members of length ``n_max + 8`` are admitted; otherwise
    :class:`StabilizationError` is raised.
    """
    if n_max < 1:
        raise ValueError("n_max must be positive")
    if n_max > bound:
        raise ValueError(f"n_max={n_max} exceeds the closure bound {bound}")
    h = n_max + HORIZON if horizon is None else horizon
    first = _counts(closure_patterns(aset, n_max, proper, h, workers), n_max)
    second = _counts(closure_patterns(aset, n_max, proper, h + 2, workers), n_max)
    if first != second:
        raise StabilizationError(
            f"{aset.label or 'set'}: counts {first} at horizon {h} became {second} at {h + 2}"
        )
    return first


def _family(alpha: str, beta: str) -> UFamilySpec:
    return UFamilySpec(parse_permutation(alpha), parse_permutation(beta))


U12_12 = _family("12", "12")
U21_12 = _family("21", "12")
U12_21 = _family("12", "21")


def _all_up_to(n: int) -> tuple[Permutation, ...]:
    return tuple(p for k in range(1, n + 1) for p in enumerate_indecomposables(k))


def _a_prime_extras() -> tuple[Permutation, ...]:
    base = closure_patterns(BUILTIN_FACTORIES["A"](), 4, proper=False)
    covered = set(base)
    return tuple(p for p in enumerate_indecomposables(4) if p not in covered)


BUILTIN_FACTORIES = {
    "A": lambda: AntichainSet(((U12_12, "all"), (U21_12, "all")), label="A"),
    "A-prime": lambda: AntichainSet(((U12_12, "all"), (U21_12, "all")), _a_prime_extras(), "A-prime"),
    "A-triple": lambda: AntichainSet(((U12_12, "all"), (U12_21, "all"), (U21_12, "all")), label="A-triple"),
    "A1": lambda: AntichainSet(((U12_12, "all"), (U12_21, "all"), (U21_12, "all")), _all_up_to(5), "A1"),
    "A2": lambda: AntichainSet(((U12_12, "all"), (U12_21, "all"), (U21_12, "all")), _all_up_to(6), "A2"),
    "A3": lambda: AntichainSet(((U12_12, "all"), (U12_21, "all"), (U21_12, "all")), _all_up_to(7), "A3"),
    "U12-12-odd": lambda: AntichainSet(((U12_12, "odd"),), label="U12-12-odd"),
}


def builtin_set(name: str) -> AntichainSet:
    try:
        return BUILTIN_FACTORIES[name]()
    except KeyError:
        raise ValueError(f"unknown antichain set {name!r}; known: {', '.join(BUILTIN_FACTORIES)}") from None


def parse_antichain_set(text: str) -> AntichainSet:
    """Read a built-in name or a ';'-separated list of families and extras.

    A family is ``alpha/beta[/parity]`` such as ``12/12/odd``; an extra is a
    permutation prefixed with ``+`` such as ``+2413``.
    """
    text = text.strip()
    if text in BUILTIN_FACTORIES:
        return builtin_set(text)
    gens = []
    extras = []
    for item in filter(None, (s.strip() for s in text.split(";"))):
        if item.startswith("+"):
            extras.append(parse_permutation(item[1:]))
            continue
        fields = item.split("/")
        if len(fields) not in (2, 3) or not all(re.fullmatch(r"\d+", f) for f in fields[:2]):
            raise ValueError(f"cannot read antichain item {item!r} (names: {', '.join(BUILTIN_FACTORIES)})")
        parity = fields[2] if len(fields) == 3 else "all"
        gens.append((_family(fields[0], fields[1]), parity))
    if not gens and not extras:
        raise ValueError(f"empty antichain description {text!r}")
    return AntichainSet(tuple(gens), tuple(extras), text)
