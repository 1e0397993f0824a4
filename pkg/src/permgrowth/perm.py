"""Permutations in one-line notation and the exact operations on them.

Everything here works with 1-based values: a :class:`Permutation` of length n
holds each of ``1..n`` exactly once.  The empty permutation is not
representable.
"""

from __future__ import annotations

import itertools
import re
from functools import reduce
from typing import Iterable, Sequence

ENUMERATION_BOUND = 10


class Permutation(tuple):
    """Immutable permutation of ``1..n`` stored as a tuple of its entries."""

    __slots__ = ()

    def __new__(cls, entries: Iterable[int]) -> Permutation:
        values = tuple(int(v) for v in entries)
        if not values:
            raise ValueError("the empty permutation is not allowed")
        if sorted(values) != list(range(1, len(values) + 1)):
            raise ValueError(f"{values} is not a permutation of 1..{len(values)}")
        return super().__new__(cls, values)

    def __str__(self) -> str:
        if len(self) <= 9:
            return "".join(map(str, self))
        return " ".join(map(str, self))

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


def parse_permutation(text: str) -> Permutation:
    """Parse "3 1 4 2", "3,1,4,2" or the compact "3142" (values <= 9 only)."""
    text = text.strip()
    if not text:
        raise ValueError("empty permutation text")
    tokens = [t for t in re.split(r"[\s,]+", text) if t]
    if len(tokens) == 1 and len(tokens[0]) > 1:
        tokens = list(tokens[0])
    for tok in tokens:
        if not tok.isdigit() or tok.startswith("0"):
            raise ValueError(f"bad permutation entry {tok!r} in {text!r}")
    return Permutation(int(t) for t in tokens)


def standardize(values: Sequence[int]) -> Permutation:
    """Return the permutation order-isomorphic to ``values``."""
    if not values:
        raise ValueError("cannot standardize an empty sequence")
    if len(set(values)) != len(values):
        raise ValueError(f"duplicate values in {tuple(values)}")
    rank = {v: i for i, v in enumerate(sorted(values), start=1)}
    return Permutation(rank[v] for v in values)


def _neighbour_table(pattern: Sequence[int]) -> list[tuple[int, int]]:
    # For each position j: the positions (< j) holding the nearest smaller and
    # nearest larger pattern value, or -1 when there is none.
    table = []
    for j, v in enumerate(pattern):
        below = above = -1
        for i in range(j):
            w = pattern[i]
            if w < v and (below < 0 or w > pattern[below]):
                below = i
            elif w > v and (above < 0 or w < pattern[above]):
                above = i
        table.append((below, above))
    return table


def contains(pattern: Sequence[int], host: Sequence[int]) -> bool:
    """True iff some subsequence of ``host`` is order-isomorphic to ``pattern``.

    Plain backtracking over host positions.  A candidate entry must sit strictly
    between the host values already matched to its nearest smaller and nearest
    larger pattern neighbours, which prunes most branches early.
    """
    k, n = len(pattern), len(host)
    if k > n:
        return False
    if k == n:
        return tuple(pattern) == tuple(host)
    table = _neighbour_table(pattern)
    matched = [0] * k

    def extend(j: int, start: int) -> bool:
        if j == k:
            return True
        below, above = table[j]
        lo = matched[below] if below >= 0 else 0
        hi = matched[above] if above >= 0 else n + 1
        for i in range(start, n - (k - j) + 1):
            v = host[i]
            if lo < v < hi:
                matched[j] = v
                if extend(j + 1, i + 1):
                    return True
        return False

    return extend(0, 0)


def direct_sum(pi: Sequence[int], sigma: Sequence[int]) -> Permutation:
    n = len(pi)
    return Permutation(itertools.chain(pi, (v + n for v in sigma)))


def sum_decompose(pi: Sequence[int]) -> list[Permutation]:
    """Split ``pi`` into its sum-indecomposable components, left to right."""
    parts = []
    start = 0
    top = 0
    for i, v in enumerate(pi):
        top = max(top, v)
        if top == i + 1:
            parts.append(Permutation(w - start for w in pi[start : i + 1]))
            start = i + 1
    return parts


def is_sum_indecomposable(pi: Sequence[int]) -> bool:
    top = 0
    for i, v in enumerate(pi[:-1]):
        top = max(top, v)
        if top == i + 1:
            return False
    return True


def sum_of(parts: Iterable[Sequence[int]]) -> Permutation:
    """Fold a nonempty list of permutations with :func:`direct_sum`."""
    return reduce(direct_sum, parts)  # type: ignore[arg-type]


def inflate(sigma: Sequence[int], parts: Sequence[Sequence[int]]) -> Permutation:
    """Replace entry ``sigma[i]`` with a block ordered like ``parts[i]``."""
    if len(parts) != len(sigma):
        raise ValueError(f"inflating a length-{len(sigma)} permutation needs {len(sigma)} parts, got {len(parts)}")
    if any(len(p) == 0 for p in parts):
        raise ValueError("inflation parts must be nonempty")
    offset = {}
    acc = 0
    for i in sorted(range(len(sigma)), key=lambda i: sigma[i]):
        offset[i] = acc
        acc += len(parts[i])
    return Permutation(offset[i] + v for i, part in enumerate(parts) for v in part)


def is_simple(pi: Sequence[int]) -> bool:
    """True iff ``pi`` has no interval of length strictly between 1 and n."""
    n = len(pi)
    for a in range(n):
        lo = hi = pi[a]
        for b in range(a + 1, n):
            lo = min(lo, pi[b])
            hi = max(hi, pi[b])
            if hi - lo == b - a and b - a + 1 < n:
                return False
    return True


def enumerate_indecomposables(n: int, bound: int = ENUMERATION_BOUND) -> list[Permutation]:
    """All sum-indecomposable permutations of length ``n`` in lexicographic order."""
    if n < 1:
        raise ValueError("length must be positive")
    if n > bound:
        raise ValueError(f"refusing to enumerate {n}! permutations (bound is {bound})")
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1)) if is_sum_indecomposable(p)]
