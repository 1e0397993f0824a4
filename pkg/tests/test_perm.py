import itertools
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permgrowth.perm import (
    Permutation,
    contains,
    direct_sum,
    enumerate_indecomposables,
    inflate,
    is_simple,
    is_sum_indecomposable,
    parse_permutation,
    standardize,
    sum_decompose,
    sum_of,
)
from permgrowth.series import class_counts

P = parse_permutation


def brute_contains(pattern, host):
    k = len(pattern)
    return any(standardize(sub) == tuple(pattern) for sub in itertools.combinations(host, k))


def all_perms(n):
    return [Permutation(p) for p in itertools.permutations(range(1, n + 1))]


perms = st.integers(1, 8).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


def test_permutation_validation():
    with pytest.raises(ValueError):
        Permutation([])
    with pytest.raises(ValueError):
        Permutation([1, 3])
    with pytest.raises(ValueError):
        Permutation([2, 2, 1])


@pytest.mark.parametrize("text, expected", [
    ("3142", (3, 1, 4, 2)),
    ("3 1 4 2", (3, 1, 4, 2)),
    ("3,1,4,2", (3, 1, 4, 2)),
    ("10 1 2 3 4 5 6 7 8 9", (10, 1, 2, 3, 4, 5, 6, 7, 8, 9)),
])
def test_parse(text, expected):
    assert parse_permutation(text) == expected


@pytest.mark.parametrize("text", ["", "3a42", "0 1", "1,1"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_permutation(text)


def test_str_round_trips():
    assert str(P("3142")) == "3142"
    long = Permutation(range(10, 0, -1))
    assert parse_permutation(str(long)) == long


def test_standardize_examples():
    assert standardize((4, 1, 6, 3)) == P("3142")
    assert standardize((7,)) == P("1")
    assert standardize((4, 1, 6, 3, 5)) == P("31524")


@pytest.mark.parametrize("values", [(), (1, 1), (3, 5, 3)])
def test_standardize_errors(values):
    with pytest.raises(ValueError):
        standardize(values)


def test_contains_example():
    # the witness 91672 sits at positions 2, 3, 5, 6, 9
    host = P("391867452")
    assert standardize([host[i - 1] for i in (2, 3, 5, 6, 9)]) == P("51342")
    assert contains(P("51342"), host)


def test_contains_trivial():
    assert not contains(P("21"), P("12"))
    assert not contains(P("123"), P("12"))
    for pi in all_perms(4):
        assert contains(P("1"), pi)


@pytest.mark.parametrize("n", range(1, 6))
def test_contains_matches_brute_force(n):
    hosts = all_perms(n)
    pats = [p for k in range(1, n + 1) for p in all_perms(k)]
    for host in hosts:
        for pat in pats:
            assert contains(pat, host) == brute_contains(pat, host), (pat, host)


@settings(max_examples=200)
@given(st.integers(8, 11).flatmap(lambda n: st.permutations(range(1, n + 1))), st.data())
def test_contains_matches_brute_force_random(host, data):
    k = data.draw(st.integers(1, 6))
    pat = data.draw(st.permutations(range(1, k + 1)))
    assert contains(pat, host) == brute_contains(pat, host)


def test_direct_sum_examples():
    assert direct_sum(P("21"), P("1")) == P("213")
    assert direct_sum(P("132"), P("21")) == P("13254")
    assert direct_sum(P("1"), P("1")) == P("12")


def test_sum_decompose_examples():
    assert sum_decompose(P("213546")) == [P("21"), P("1"), P("21"), P("1")]
    assert sum_decompose(P("1")) == [P("1")]
    assert sum_decompose(P("412563")) == [P("412563")]


def test_indecomposable_examples():
    assert is_sum_indecomposable(P("21"))
    assert not is_sum_indecomposable(P("12"))
    assert is_sum_indecomposable(P("3142"))


@given(perms)
def test_decomposition_round_trip_and_components(pi):
    parts = sum_decompose(pi)
    assert sum_of(parts) == pi
    assert all(is_sum_indecomposable(c) for c in parts)
    assert is_sum_indecomposable(pi) == (len(parts) == 1)


def test_inflate_examples():
    assert inflate(P("3142"), [P("132"), P("21"), P("1"), P("123")]) == P("687219345")
    for a, b in itertools.product(all_perms(2) + all_perms(3), repeat=2):
        assert inflate(P("12"), [a, b]) == direct_sum(a, b)
    assert inflate(P("1"), [P("2413")]) == P("2413")
    with pytest.raises(ValueError):
        inflate(P("21"), [P("1")])


def test_simple_examples():
    assert is_simple(P("3142"))
    assert not is_simple(P("213"))
    assert not is_simple(P("687219345"))
    assert is_simple(P("1")) and is_simple(P("12")) and is_simple(P("21"))


def brute_simple(pi):
    n = len(pi)
    for a in range(n):
        for b in range(a + 1, n):
            if 1 < b - a + 1 < n and set(pi[a:b + 1]) == set(range(min(pi[a:b + 1]), max(pi[a:b + 1]) + 1)):
                return False
    return True


@pytest.mark.parametrize("n", range(1, 8))
def test_simple_matches_window_oracle(n):
    for pi in all_perms(n):
        assert is_simple(pi) == brute_simple(pi)


small = st.integers(1, 3).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation)


@settings(max_examples=150)
@given(st.integers(1, 4).flatmap(lambda n: st.permutations(range(1, n + 1))).map(Permutation), st.data())
def test_inflation_contains_its_parts(sigma, data):
    parts = [data.draw(small) for _ in sigma]
    pi = inflate(sigma, parts)
    assert len(pi) == sum(map(len, parts))
    assert contains(sigma, pi)
    assert all(contains(p, pi) for p in parts)
    if len(sigma) >= 2 and any(len(p) >= 2 for p in parts):
        assert not is_simple(pi)


def test_enumerate_examples():
    assert enumerate_indecomposables(1) == [P("1")]
    four = enumerate_indecomposables(4)
    assert len(four) == 13
    assert four == sorted(four)
    with pytest.raises(ValueError):
        enumerate_indecomposables(11)


@pytest.mark.parametrize("n, expected", [(1, 1), (2, 1), (3, 3), (4, 13), (5, 71), (6, 461), (7, 3447)])
def test_enumerate_counts_against_filter(n, expected):
    # the oracle filters n! permutations by the prefix-value-set definition
    oracle = sum(
        1 for p in itertools.permutations(range(1, n + 1))
        if not any(set(p[:j]) == set(range(1, j + 1)) for j in range(1, n))
    )
    assert oracle == expected
    assert len(enumerate_indecomposables(n)) == expected


def test_compositions_rebuild_factorials():
    # every permutation is a unique sequence of indecomposables
    counts = [len(enumerate_indecomposables(n)) for n in range(1, 8)]
    assert class_counts(counts, 7) == tuple(math.factorial(n) for n in range(8))


def test_containment_partial_order_small():
    everything = [p for n in range(1, 6) for p in all_perms(n)]
    above = {p: {q for q in everything if contains(p, q)} for p in everything}
    for p in everything:
        assert p in above[p]
        for q in above[p]:
            if p in above[q]:
                assert p == q
            assert above[q] <= above[p]
