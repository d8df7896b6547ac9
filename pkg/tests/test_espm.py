import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from equiseq import UnsupportedLength, kmp_search, oracle
from equiseq import espm
from equiseq import subcadence as sc
from conftest import random_text

STRATS = ("split", "bitpar", "auto")


def as_set(occs):
    return {(o.i, o.d) for o in occs}


def test_kmp_examples():
    assert kmp_search("aaa", "aa") == [1, 2]
    assert kmp_search("abc", "d") == []
    assert kmp_search("ababab", "abab") == [1, 3]
    assert kmp_search("abcabcab", "cab") == [3, 6]


def test_kmp_matches_naive():
    rng = random.Random(2)
    for _ in range(200):
        hay = random_text(rng, rng.randint(0, 60), 2)
        needle = random_text(rng, rng.randint(1, 5), 2)
        naive = [i + 1 for i in range(len(hay) - len(needle) + 1) if hay[i : i + len(needle)] == needle]
        assert kmp_search(hay, needle) == naive


@pytest.mark.parametrize("s", STRATS)
def test_sample_pattern_aacc(sample_text, s):
    assert as_set(espm.locate_espm(sample_text, "aacc", s, d=3)) == {(9, 3)}
    assert espm.count_espm(sample_text, "aacc", s, d=3) == 1


@pytest.mark.parametrize("s", STRATS)
def test_small_examples(s):
    assert as_set(espm.locate_espm("ab", "ab", s)) == {(1, 1)}
    assert espm.locate_espm("ba", "ab", s) == []
    assert espm.count_espm("aaaa", "aa", s) == 6
    assert espm.count_espm("abc", "abcd", s) == 0
    assert (1, 1) in as_set(espm.locate_espm("abcab", "abcab", s))
    assert espm.count_espm("abcab", "abcaz", s) == 0


def test_absent_pattern_character_short_circuits():
    assert espm.count_bitpar("aaaa", "az") == 0
    assert espm.locate_bitpar("aaaa", "az") == []


def test_rejects_short_pattern():
    for s in STRATS:
        with pytest.raises(UnsupportedLength):
            espm.count_espm("abc", "a", s)


def test_match_vector(sample_text):
    v = espm.match_vector(sample_text, "aacc", 3)
    assert len(v) == 18 - 9
    assert list(v.iter_set_bits()) == [9]


def test_unary_pattern_specializes_to_subcadences():
    rng = random.Random(4)
    for _ in range(30):
        data = random_text(rng, 90, 2)
        for k in (2, 3, 4):
            assert espm.locate_espm(data, "a" * k) == sc.locate_subcadences(data, k, char="a")


def test_plan():
    assert espm.plan("x" * 1024, "ab") == "bitpar"
    assert espm.plan("x" * 1024, "a" * 10) == "split"


@settings(max_examples=150, deadline=None)
@given(
    st.binary(min_size=0, max_size=70).map(lambda b: bytes(97 + x % 3 for x in b)),
    st.binary(min_size=2, max_size=5).map(lambda b: bytes(97 + x % 3 for x in b)),
)
def test_strategies_agree_with_oracle(data, pattern):
    expected = oracle.brute_esp(data, pattern)
    for s in STRATS:
        got = espm.locate_espm(data, pattern, s)
        assert got == expected
        assert espm.count_espm(data, pattern, s) == len(got)
    for i, d in expected:
        assert data[i - 1 : i - 1 + (len(pattern) - 1) * d + 1 : d] == pattern
