"""Word normalization, arch factorization, and the positional index."""

import random

import pytest

from absub import build_index, build_word, next_pos
from absub.errors import EmptyInput, InvalidSymbol, OutOfRange
from absub.oracle import brute_iota
from absub.string_index import range_max_next

from helpers import canonical_words, index_of, random_letters


def test_build_word_bytes_renames_by_first_occurrence():
    w = build_word("abacab")
    assert w.letters == (1, 2, 1, 3, 1, 2)
    assert w.sigma == 3
    assert w.symbols == ("a", "b", "c")
    assert w.render() == "abacab"
    assert w.render((3, 2, 1)) == "cba"
    assert w.at(4) == 3
    assert w.letter_of("c") == 3


def test_build_word_ints():
    w = build_word("5 5 9 5 13", "ints")
    assert w.letters == (1, 1, 2, 1, 3)
    assert w.symbols == (5, 9, 13)
    assert w.render() == "5 5 9 5 13"
    w2 = build_word([5, 5, 9, 5, 13], "ints")
    assert w2.letters == w.letters


def test_build_word_rejects_bad_input():
    with pytest.raises(EmptyInput):
        build_word("")
    with pytest.raises(EmptyInput):
        build_word("   ", "ints")
    with pytest.raises(InvalidSymbol):
        build_word("1 x 2", "ints")
    with pytest.raises(InvalidSymbol):
        build_word("1 0 2", "ints")
    with pytest.raises(InvalidSymbol):
        build_word(123)
    with pytest.raises(ValueError):
        build_word("ab", "letters")
    with pytest.raises(InvalidSymbol):
        build_word("ab").letter_of("z")


def test_arch_factorization_fixture():
    idx = index_of("1121332211322")
    assert idx.arches.ends == (5, 9, 12)
    assert idx.arches.rest_start == 13
    assert idx.arches.iota == 3
    assert idx.arches.arch_bounds(1) == (1, 5)
    assert idx.arches.arch_bounds(2) == (6, 9)
    assert idx.arches.arch_bounds(3) == (10, 12)

    idx = index_of("1223313")
    assert idx.arches.ends == (4,)
    assert idx.arches.rest_start == 5
    assert idx.arches.iota == 1


def test_iota_matches_brute_exhaustively():
    for letters in canonical_words(9, 3):
        idx = index_of(letters)
        assert idx.arches.iota == brute_iota(letters, idx.sigma), letters


def test_iota_at_least_one():
    # the alphabet is exactly the occurring symbols, so arch 1 always closes
    rng = random.Random(11)
    for _ in range(50):
        idx = index_of(random_letters(rng, 50, 8))
        assert idx.arches.iota >= 1


def test_next_prev_arrays_are_inverse_occurrence_links():
    rng = random.Random(12)
    for _ in range(50):
        idx = index_of(random_letters(rng, 60, 6))
        n = idx.n
        w = idx.word
        for i in range(1, n + 1):
            j = idx.next_array[i]
            assert i < j <= n + 1
            if j <= n:
                assert w.at(j) == w.at(i)
                assert idx.prev_array[j] == i
                # no closer occurrence in between
                assert all(w.at(t) != w.at(i) for t in range(i + 1, j))
            p = idx.prev_array[i]
            assert 0 <= p < i
            if p > 0:
                assert idx.next_array[p] == i
        for a in range(1, idx.sigma + 1):
            occ = idx.occurrences[a]
            assert occ == sorted(occ)
            assert [w.at(i) for i in occ] == [a] * len(occ)
        assert sum(len(idx.occurrences[a]) for a in range(1, idx.sigma + 1)) == n


def _dist_naive(letters, sigma, i):
    # shortest v starting with letters[i-1] that does not embed in letters[i-1:]
    suffix = tuple(letters[i - 1:])
    first = suffix[0]

    def embeds(v, word):
        pos = 0
        for a in v:
            while pos < len(word) and word[pos] != a:
                pos += 1
            if pos == len(word):
                return False
            pos += 1
        return True

    length = 1
    while True:
        words = [(first,)]
        for _ in range(length - 1):
            words = [v + (a,) for v in words for a in range(1, sigma + 1)]
        if any(not embeds(v, suffix) for v in words):
            return length
        length += 1


def test_dist_matches_naive_exhaustively():
    for letters in canonical_words(8, 3):
        idx = index_of(letters)
        for i in range(1, idx.n + 1):
            assert idx.dist[i] == _dist_naive(letters, idx.sigma, i), (letters, i)


def test_dist_matches_suffix_universality_on_random_words():
    rng = random.Random(13)
    for _ in range(100):
        letters = random_letters(rng, 40, 5)
        idx = index_of(letters)
        canon = idx.word.letters
        for _ in range(8):
            i = rng.randint(1, idx.n)
            assert idx.dist[i] == 2 + brute_iota(canon[i:], idx.sigma)


def test_first_last_pos_arch_tables():
    rng = random.Random(14)
    for _ in range(40):
        idx = index_of(random_letters(rng, 50, 5))
        w = idx.word
        for ell in range(1, idx.arches.iota + 1):
            lo, hi = idx.arches.arch_bounds(ell)
            for a in range(1, idx.sigma + 1):
                inside = [i for i in range(lo, hi + 1) if w.at(i) == a]
                assert idx.first_pos_arch[ell][a] == (inside[0] if inside else 0)
                assert idx.last_pos_arch[ell][a] == (inside[-1] if inside else 0)
            # every arch contains the full alphabet
            assert all(idx.first_pos_arch[ell][a] for a in range(1, idx.sigma + 1))


def test_next_pos_fixture_and_bounds():
    idx = index_of("1223313")
    two = idx.word.letter_of("2")
    three = idx.word.letter_of("3")
    assert next_pos(idx, three, 1) == 4
    assert next_pos(idx, two, 2) == 2
    assert next_pos(idx, two, 5) == 8  # absent from position 5 on: sentinel n+1
    assert next_pos(idx, three, 8) == 8
    for a, i in ((0, 1), (4, 1), (1, 0), (1, 9)):
        with pytest.raises(OutOfRange):
            next_pos(idx, a, i)


def test_next_pos_matches_scan():
    rng = random.Random(15)
    for _ in range(40):
        idx = index_of(random_letters(rng, 30, 4))
        n = idx.n
        w = idx.word
        for a in range(1, idx.sigma + 1):
            for i in range(1, n + 2):
                want = next((t for t in range(i, n + 1) if w.at(t) == a), n + 1)
                assert next_pos(idx, a, i) == want


def test_range_max_next_matches_naive():
    rng = random.Random(16)
    for _ in range(100):
        idx = index_of(random_letters(rng, 64, 6))
        n = idx.n
        nxt = idx.next_array
        for _ in range(30):
            i = rng.randint(1, n)
            j = rng.randint(1, n)
            if i > j:
                assert range_max_next(idx, i, j) is None
                continue
            best = max(range(i, j + 1), key=lambda t: (nxt[t], -t))
            assert range_max_next(idx, i, j) == best


def test_occurrence_rank_and_nextpos_matrix():
    rng = random.Random(17)
    idx = index_of(random_letters(rng, 40, 4))
    w = idx.word
    for i in range(1, idx.n + 1):
        before = sum(1 for t in range(1, i) if w.at(t) == w.at(i))
        assert idx.occurrence_rank(i) == before
    rows = idx.nextpos_matrix()
    for a in range(1, idx.sigma + 1):
        for i in range(1, idx.n + 2):
            want = next((t for t in range(i, idx.n + 1) if w.at(t) == a), idx.n + 1)
            assert rows[a][i] == want
