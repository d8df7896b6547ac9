from equiseq import oracle


def pairs(occs):
    return [(o.i, o.d) for o in occs]


def test_subcadences():
    assert pairs(oracle.brute_subcadences("aaa", 2)) == [(1, 1), (2, 1), (1, 2)]
    assert oracle.brute_subcadences("abc", 2) == []


def test_cadences():
    assert pairs(oracle.brute_cadences("aaa", 2)) == [(1, 2)]
    assert pairs(oracle.brute_cadences("caaacaabaabaabcabc", 3)) == [(4, 6), (2, 7)]


def test_esp_and_abelian():
    assert pairs(oracle.brute_esp("caaacaabaabaabcabc", "aacc")) == [(9, 3)]
    assert pairs(oracle.brute_abelian3("cab", "abc")) == [(1, 1)]


def test_convolve():
    assert oracle.brute_convolve([1, 1], [1, 1]) == [1, 2, 1]
    assert oracle.brute_convolve([1, 1], [1, 1], "x_less_than_y") == [0, 1, 0]


def test_masked_count():
    assert oracle.masked_cadence_count("a" * 10, 2) == 17
