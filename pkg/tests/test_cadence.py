import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equiseq import Occurrence, UnsupportedLength, oracle
from equiseq import cadence as cd
from equiseq import subcadence as sc
from conftest import random_text

STRATS = ("filter", "windowed", "pairs", "auto")


def as_set(occs):
    return {(o.i, o.d) for o in occs}


def test_is_cadence_examples():
    assert cd.is_cadence(Occurrence(1, 2), 3, 2)
    assert not cd.is_cadence(Occurrence(2, 1), 3, 2)
    assert not cd.is_cadence(Occurrence(1, 1), 3, 2)


@pytest.mark.parametrize("s", STRATS)
def test_small_examples(s):
    assert as_set(cd.locate_cadences("aaa", 2, s)) == {(1, 2)}
    assert as_set(cd.locate_cadences("aaaa", 2, s)) == {(1, 2), (2, 2), (1, 3)}
    # (1,2): 1<=2, 1+4>4; (2,2): 2<=2, 2+4>4
    assert as_set(cd.locate_cadences("abab", 2, s)) == {(1, 2), (2, 2)}
    assert cd.count_cadences("aaaa", 2, s) == 3
    assert cd.locate_cadences("ab", 3, s) == []


def test_windowed_distance_two_contribution():
    assert cd.count_windowed("aaaa", 2, d=2) == 2
    assert cd.window_vector("aaaa", "a", 2, 2).to_string() == "11"


def test_sample_text_matches_oracle(sample_text):
    for k in range(2, 7):
        expected = oracle.brute_cadences(sample_text, k)
        for s in STRATS:
            assert cd.locate_cadences(sample_text, k, s) == expected


@pytest.mark.parametrize("n", [2, 3, 10, 31])
def test_unary_hand_formula(n):
    expected = sum(
        1
        for d in range(1, n)
        for i in range(1, n + 1)
        if i <= d and i + 2 * d > n and i + d <= n
    )
    for s in STRATS:
        assert cd.count_cadences("a" * n, 2, s) == expected


def test_window_vector_matches_kernel():
    rng = random.Random(11)
    data = random_text(rng, 120, 2)
    for k in (2, 3, 5):
        for d in range(cd.first_window_distance(120, k), (119 // (k - 1)) + 1):
            lo, hi = cd.window(120, k, d)
            bits = cd.window_vector(data, "a", k, d)
            found = {(lo + t - 1, d) for t in bits.iter_set_bits()}
            assert found == as_set(cd.locate_windowed(data, k, d=d, char="a"))


def test_windows_below_first_distance_are_empty():
    rng = random.Random(5)
    for _ in range(30):
        data = random_text(rng, rng.randint(5, 90), 2)
        n = len(data)
        for k in (2, 3, 4):
            first = cd.first_window_distance(n, k)
            assert all(o.d >= first and (k + 1) * o.d > n for o in oracle.brute_cadences(data, k))
            for d in range(1, first):
                lo, hi = cd.window(n, k, d)
                assert lo > hi


def test_masked_form_agrees():
    rng = random.Random(9)
    for _ in range(20):
        data = random_text(rng, 70, 3)
        for k in (2, 3, 4):
            assert oracle.masked_cadence_count(data, k) == cd.count_windowed(data, k)


@settings(max_examples=150, deadline=None)
@given(
    st.binary(min_size=0, max_size=80).map(lambda b: bytes(97 + x % 2 for x in b)),
    st.integers(2, 6),
)
def test_strategies_agree_and_subset(data, k):
    expected = oracle.brute_cadences(data, k)
    subs = as_set(sc.locate_subcadences(data, k))
    for s in STRATS:
        got = cd.locate_cadences(data, k, s)
        assert got == expected
        assert cd.count_cadences(data, k, s) == len(got)
        assert as_set(got) <= subs
        n = len(data)
        assert all(n - k * o.d < o.i <= o.d for o in got)


def test_rejects_k_below_two():
    for s in STRATS:
        with pytest.raises(UnsupportedLength):
            cd.count_cadences("aaa", 1, s)


def test_plan():
    assert cd.plan("a" * 64, 25) == "filter"  # sqrt(64 * 6) ~ 19.6
    assert cd.plan("a" * 64, 3) == {ord("a"): "windowed"}
