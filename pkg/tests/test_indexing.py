import math
import random

import pytest

from necklaces import counting, indexing
from necklaces.errors import NotAperiodic
from necklaces.indexing import TOO_LARGE, ProbeCounter
from necklaces.oracle import brute_orbits
from necklaces.words import NkString, fundamental_period, min_rotation, parse_word


def w(text, q=2):
    return parse_word(text, q)


def test_index_necklace_examples():
    got = [indexing.index_necklace(3, 2, j) for j in range(1, 5)]
    assert [g.digits for g in got] == [(0, 0, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1)]
    assert indexing.index_necklace(3, 2, 5) is TOO_LARGE
    for j in range(1, 8):
        assert indexing.index_necklace(1, 7, j).digits == (j - 1,)
    assert indexing.index_necklace(1, 7, 8) is TOO_LARGE
    assert indexing.index_necklace(4, 2, 4).digits == (0, 1, 0, 1)
    with pytest.raises(ValueError):
        indexing.index_necklace(3, 2, 0)


def test_reverse_index_examples():
    res = indexing.reverse_index_necklace(w("110"))
    assert res.rank == 3 and res.canonical.digits == (0, 1, 1)
    assert indexing.reverse_index_necklace(w("000")).rank == 1
    assert indexing.reverse_index_necklace(w("1111")).rank == 6


def test_lyndon_examples():
    assert indexing.index_lyndon(3, 2, 1).digits == (0, 0, 1)
    assert indexing.index_lyndon(3, 2, 2).digits == (0, 1, 1)
    assert indexing.index_lyndon(3, 2, 3) is TOO_LARGE
    got = [indexing.index_lyndon(2, 3, j).digits for j in (1, 2, 3)]
    assert got == [(0, 1), (0, 2), (1, 2)]
    res = indexing.reverse_index_lyndon(w("10"))
    assert res.rank == 1 and res.canonical.digits == (0, 1)
    with pytest.raises(NotAperiodic):
        indexing.reverse_index_lyndon(w("0101"))


def test_bijection_against_enumeration():
    for q, top in ((2, 10), (3, 6)):
        for n in range(1, top + 1):
            orbits = brute_orbits(n, q)
            reps = [rep for rep, _ in orbits]
            total = counting.count_necklaces(n, q)
            assert total == len(reps)
            for j, rep in enumerate(reps, start=1):
                got = indexing.index_necklace(n, q, j)
                assert got.digits == rep.digits, (n, q, j)
                assert indexing.reverse_index_necklace(rep).rank == j
            assert indexing.index_necklace(n, q, total + 1) is TOO_LARGE

            lyndon = [rep for rep, size in orbits if size == n]
            assert counting.count_lyndon(n, q) == len(lyndon)
            for j, rep in enumerate(lyndon, start=1):
                got = indexing.index_lyndon(n, q, j)
                assert got.digits == rep.digits
                assert indexing.reverse_index_lyndon(rep).rank == j
            assert indexing.index_lyndon(n, q, len(lyndon) + 1) is TOO_LARGE


def test_round_trip_on_arbitrary_words():
    rng = random.Random(37)
    for _ in range(120):
        n = rng.randrange(1, 9)
        q = rng.choice([2, 3, 5])
        x = NkString.from_int(n, q, rng.randrange(q**n))
        res = indexing.reverse_index_necklace(x)
        back = indexing.index_necklace(n, q, res.rank)
        assert back.digits == min_rotation(x)[0].digits


def test_outputs_are_ordered_and_canonical():
    for n, q in ((7, 2), (4, 3)):
        total = counting.count_necklaces(n, q)
        prev = None
        for j in range(1, total + 1):
            word = indexing.index_necklace(n, q, j)
            assert min_rotation(word)[0].digits == word.digits
            if prev is not None:
                assert prev < word.digits
            prev = word.digits
        for j in range(1, counting.count_lyndon(n, q) + 1):
            word = indexing.index_lyndon(n, q, j)
            assert fundamental_period(word) == word.n


def test_probe_budget():
    for n, q, j in ((10, 2, 50), (5, 3, 7), (4, 97, 1000)):
        counter = ProbeCounter()
        indexing.index_necklace(n, q, j, probe_counter=counter)
        assert counter.count <= n * math.ceil(math.log2(q)) + 2


def test_rank_result_is_frozen():
    res = indexing.reverse_index_necklace(w("01"))
    with pytest.raises(Exception):
        res.rank = 5
