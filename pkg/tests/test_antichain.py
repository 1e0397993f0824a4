import itertools
import random

import pytest

from permgrowth import antichain as ac
from permgrowth.antichain import (
    AntichainSet,
    StabilizationError,
    UFamilySpec,
    builtin_set,
    closure_counts,
    closure_patterns,
    members_up_to,
    oscillation_sigma,
    parse_antichain_set,
    u_member,
    verify_antichain,
)
from permgrowth.perm import (
    Permutation,
    contains,
    enumerate_indecomposables,
    is_simple,
    is_sum_indecomposable,
    parse_permutation,
    standardize,
)

P = parse_permutation
PAIRS = [UFamilySpec(P(a), P(b)) for a, b in itertools.product(["12", "21"], repeat=2)]


def brute_closure(members, n_max, proper):
    """Indecomposable patterns by enumerating every subsequence of every member."""
    found = set()
    for m in members:
        for n in range(1, min(n_max, len(m)) + 1):
            if proper and n == len(m):
                continue
            for sub in itertools.combinations(m, n):
                q = standardize(sub)
                if is_sum_indecomposable(q):
                    found.add(q)
        if not proper and len(m) <= n_max and is_sum_indecomposable(m):
            found.add(m)
    return [sum(1 for q in found if len(q) == n) for n in range(1, n_max + 1)]


def test_oscillation_examples():
    assert oscillation_sigma(4) == P("3142")
    assert oscillation_sigma(5) == P("31524")
    assert oscillation_sigma(6) == P("315264")
    with pytest.raises(ValueError):
        oscillation_sigma(3)


@pytest.mark.parametrize("k", range(4, 15))
def test_oscillations_simple_and_indecomposable(k):
    s = oscillation_sigma(k)
    assert len(s) == k
    assert is_simple(s) and is_sum_indecomposable(s)


def test_u_member_examples():
    assert u_member(UFamilySpec(P("12"), P("12")), 9) == P("4 1 2 6 3 8 5 11 7 9 10")
    assert u_member(UFamilySpec(P("21"), P("12")), 10) == P("4 2 1 6 3 8 5 10 7 11 12 9")
    assert u_member(UFamilySpec(P("12"), P("12")), 4) == P("412563")


def test_u_member_k3_convention():
    # least three entries 4,1,3 of the oscillating sequence read as 312
    assert u_member(UFamilySpec(P("12"), P("12")), 3) == P("51234")
    assert u_member(UFamilySpec(P("21"), P("12")), 3) == P("52134")
    with pytest.raises(ValueError):
        u_member(PAIRS[0], 2)


@pytest.mark.parametrize("spec", PAIRS, ids=str)
def test_u_members_indecomposable_with_exact_length(spec):
    for k in range(3, 15):
        m = u_member(spec, k)
        assert is_sum_indecomposable(m)
        assert len(m) == k + len(spec.alpha) + len(spec.beta) - 2


def test_family_spec_rejects_length_one():
    with pytest.raises(ValueError):
        UFamilySpec(P("1"), P("12"))


def test_members_up_to():
    a = builtin_set("A")
    assert members_up_to(a, 4) == []
    assert members_up_to(a, 5) == [P("51234"), P("52134")]
    seven = members_up_to(a, 7)
    assert len(seven) == 6
    assert [len(m) for m in seven] == [5, 5, 6, 6, 7, 7]
    assert seven == sorted(seven, key=lambda p: (len(p), p))
    with pytest.raises(ValueError):
        members_up_to(a, 0)


def test_a_prime_extras_are_the_missing_length_four():
    extras_only = AntichainSet(extras=builtin_set("A-prime").extras)
    four = members_up_to(extras_only, 4)
    assert len(four) == 8
    in_a = set(closure_patterns(builtin_set("A"), 4, proper=False))
    assert set(four) | {p for p in in_a if len(p) == 4} == set(enumerate_indecomposables(4))


def test_members_deduplicated_across_unions():
    doubled = AntichainSet(((PAIRS[0], "all"), (PAIRS[0], "odd")))
    assert members_up_to(doubled, 12) == members_up_to(AntichainSet(((PAIRS[0], "all"),)), 12)


def test_verify_antichain_examples():
    assert not verify_antichain([P("1"), P("12")])
    members = members_up_to(builtin_set("A-triple"), 14)
    assert verify_antichain(members)
    assert not verify_antichain(members + [members[3]])
    shuffled = members[:]
    random.Random(0).shuffle(shuffled)
    assert verify_antichain(shuffled)


def test_verify_antichain_matches_pairwise_brute_force():
    members = members_up_to(builtin_set("A-prime"), 11)
    brute = not any(
        i != j and len(p) < len(q) and any(standardize(s) == p for s in itertools.combinations(q, len(p)))
        for i, p in enumerate(members) for j, q in enumerate(members)
    )
    assert verify_antichain(members) == brute is True


@pytest.mark.parametrize("name", ["A", "A-prime", "A-triple", "U12-12-odd"])
@pytest.mark.parametrize("proper", [True, False])
def test_closure_matches_subsequence_oracle(name, proper):
    aset = builtin_set(name)
    fast = closure_patterns(aset, 7, proper, horizon=11)
    counts = [sum(1 for p in fast if len(p) == n) for n in range(1, 8)]
    assert counts == brute_closure(members_up_to(aset, 11), 7, proper)


def test_closure_reference_sequences():
    assert closure_counts(builtin_set("A"), 12, True) == [1, 1, 3, 5] + [6] * 8
    assert closure_counts(builtin_set("A"), 12, False) == [1, 1, 3, 5] + [8] * 8
    assert closure_counts(builtin_set("A-triple"), 12, True) == [1, 1, 3, 7] + [8] * 8
    assert closure_counts(builtin_set("U12-12-odd"), 12, True) == [1, 1, 2, 3] + [4] * 8
    assert closure_counts(builtin_set("A-prime"), 8, False) == [1, 1, 3, 13, 8, 8, 8, 8]


def test_length8_proper_patterns():
    eight = [p for p in closure_patterns(builtin_set("A"), 8, True) if len(p) == 8]
    pictured = {P(s) for s in ("41263857", "42163857", "24163785", "31528467", "31527486", "24163857")}
    assert set(eight) == pictured


def test_closure_monotone_in_horizon_and_stable():
    aset = builtin_set("A-triple")
    prev = None
    for h in range(6, 16):
        counts = [sum(1 for p in closure_patterns(aset, 8, True, horizon=h) if len(p) == n) for n in range(1, 9)]
        if prev is not None:
            assert all(a >= b for a, b in zip(counts, prev))
        prev = counts
    assert prev == closure_counts(aset, 8, True)


def test_stabilization_failure_is_reported():
    with pytest.raises(StabilizationError):
        closure_counts(builtin_set("A"), 8, True, horizon=8)


def test_closure_bound():
    with pytest.raises(ValueError):
        closure_counts(builtin_set("A"), 13, True)
    assert len(closure_counts(builtin_set("A"), 13, True, bound=13)) == 13


@pytest.mark.parametrize("name", ["A", "A-triple", "U12-12-odd"])
def test_total_dominates_proper(name):
    aset = builtin_set(name)
    proper = closure_counts(aset, 10, True)
    total = closure_counts(aset, 10, False)
    lengths = {len(m) for m in members_up_to(aset, 10)}
    for n in range(1, 11):
        assert total[n - 1] >= proper[n - 1]
        if n not in lengths:
            assert total[n - 1] == proper[n - 1]


def test_parallel_matches_sequential():
    aset = builtin_set("A-triple")
    assert closure_counts(aset, 10, True, workers=2) == closure_counts(aset, 10, True)
    assert closure_patterns(aset, 9, False, workers=2) == closure_patterns(aset, 9, False)


def test_subpatterns_are_proper_and_contained():
    m = u_member(PAIRS[1], 7)
    subs = ac.indecomposable_subpatterns(m)
    assert m not in subs
    assert all(contains(q, m) and is_sum_indecomposable(q) for q in subs)
    assert ac.indecomposable_subpatterns(Permutation([1])) == frozenset()


def test_parse_antichain_set():
    assert members_up_to(parse_antichain_set("12/12/odd"), 13) == members_up_to(builtin_set("U12-12-odd"), 13)
    assert members_up_to(parse_antichain_set("12/12;21/12"), 12) == members_up_to(builtin_set("A"), 12)
    mixed = parse_antichain_set("12/21/even; +2413")
    assert P("2413") in members_up_to(mixed, 4)
    for bad in ("", "12", "12/12/sometimes", "nope", "+12"):
        with pytest.raises(ValueError):
            parse_antichain_set(bad)
    with pytest.raises(ValueError):
        builtin_set("B")


def test_builtin_a_sets_with_extras_are_not_antichains():
    assert not verify_antichain(members_up_to(builtin_set("A1"), 8))
    assert closure_counts(builtin_set("A1"), 8, True) == [1, 1, 3, 13, 8, 8, 8, 8]
    assert closure_counts(builtin_set("A1"), 8, False) == [1, 1, 3, 13, 71, 11, 11, 11]
