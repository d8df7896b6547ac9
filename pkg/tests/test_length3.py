import itertools
import random

import pytest

from equiseq import ParityError, UnsupportedLength, count_abelian3, count_esp3, oracle
from equiseq import length3
from equiseq.espm import count_espm
from conftest import random_text

SHAPES = {"aaa": "aaa", "aba": "aba", "aab": "aac", "abb": "acc", "abc": "abc"}


def test_examples():
    assert count_esp3("aba", "aba").g.tolist() == [0, 1, 0]
    assert count_esp3("aaaaa", "aaa").total == 4
    assert count_esp3("ab", "abc").total == 0
    assert count_abelian3("cab", "abc").total == 1
    assert count_esp3("abcabc", "abc").g.tolist() == [0, 1, 0, 0, 1, 0]


def test_shapes():
    for p, s in SHAPES.items():
        assert length3.shape(p) == s
    with pytest.raises(UnsupportedLength):
        length3.shape("ab")


def test_sample_text(sample_text):
    # frozen from oracle.brute_esp / brute_abelian3
    assert count_esp3(sample_text, "abc").total == 5
    assert count_abelian3(sample_text, "abc").total == 14
    assert count_esp3(sample_text, "aab").total == 12


def test_parity_guard():
    with pytest.raises(ParityError):
        length3._halve(length3.np.array([2, 3]), length3.np.array([True, False]), minus_one=True)
    with pytest.raises(ParityError):
        length3._halve(length3.np.array([1]), length3.np.array([True]), minus_one=False)


@pytest.mark.parametrize("pattern", list(SHAPES))
def test_shapes_against_oracle(pattern):
    rng = random.Random(hash(pattern) & 0xFFFF)
    for _ in range(25):
        data = random_text(rng, rng.randint(0, 120), 3)
        prof = count_esp3(data, pattern)
        found = oracle.brute_esp(data, pattern)
        assert prof.total == len(found) == count_espm(data, pattern, "bitpar")
        per_middle = [0] * len(data)
        for i, d in found:
            per_middle[i + d - 1] += 1
        assert prof.g.tolist() == per_middle
        # occurrences only centre on the middle character
        mids = [z for z, v in enumerate(prof.g.tolist(), 1) if v]
        assert all(data[z - 1] == pattern.encode()[1] for z in mids)


@pytest.mark.parametrize("pattern", ["abc", "aab", "aba", "aaa", "cbb"])
def test_abelian_is_sum_over_permutations(pattern):
    rng = random.Random(5)
    for _ in range(25):
        data = random_text(rng, rng.randint(0, 120), 3)
        perms = {"".join(p) for p in itertools.permutations(pattern)}
        prof = count_abelian3(data, pattern)
        assert prof.g.tolist() == sum(count_esp3(data, q).g for q in perms).tolist()
        assert prof.total == len(oracle.brute_abelian3(data, pattern))
