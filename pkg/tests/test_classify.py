"""Membership predicates against naive checks and small exhaustion."""

import itertools
import random

import pytest

from absub.classify import (
    Absent,
    Embedding,
    canonical_embedding,
    complete_mas_prefix,
    is_mas,
    is_mas_prefix,
    is_sas,
    is_subsequence,
)
from absub import enumerate_sas
from absub.errors import AlphabetMismatch, NotMasPrefix
from absub.oracle import (
    brute_mas,
    brute_sas,
    is_mas_naive,
    is_mas_prefix_naive,
    is_sas_naive,
    is_subsequence_naive,
)

from helpers import canonical_words, index_of, random_letters


def test_canonical_embedding_fixtures():
    idx = index_of("1121332211322")
    assert canonical_embedding((2, 1), idx) == Embedding((3, 4))
    assert canonical_embedding((1, 1, 2), idx) == Embedding((1, 2, 3))
    idx = index_of("1223313")
    assert canonical_embedding((3, 2), idx) == Absent(2)
    assert canonical_embedding((2, 2, 2), idx) == Absent(3)


def test_letters_outside_the_alphabet_are_rejected():
    idx = index_of("1223313")
    for fn in (canonical_embedding, is_subsequence, is_sas, is_mas, is_mas_prefix):
        with pytest.raises(AlphabetMismatch):
            fn((1, 4), idx)


def test_empty_pattern():
    idx = index_of("1223313")
    assert is_subsequence((), idx)
    assert not is_sas((), idx)
    assert not is_mas((), idx)
    assert not is_mas_prefix((), idx)


def test_single_letters_are_never_minimal_absent():
    # the alphabet convention makes every letter occur
    idx = index_of("1223313")
    for a in (1, 2, 3):
        assert not is_mas((a,), idx)
        assert is_mas_prefix((a,), idx)


def test_fixture_sets():
    idx = index_of("1223313")
    assert is_sas((3, 2), idx)
    assert is_mas((3, 2), idx)
    assert not is_sas((2, 3), idx)
    assert not is_mas((1, 2), idx)

    idx = index_of("11211111")
    assert is_mas((2, 2), idx)
    assert is_mas((1, 1, 1, 2), idx)
    assert is_mas((1,) * 8, idx)
    assert not is_mas((1,) * 7, idx)
    assert not is_mas((2, 2, 2), idx)


def _all_patterns(sigma, max_len):
    for length in range(1, max_len + 1):
        yield from itertools.product(range(1, sigma + 1), repeat=length)


def test_predicates_match_naive_exhaustively():
    for letters in canonical_words(7, 2):
        idx = index_of(letters)
        for v in _all_patterns(idx.sigma, 5):
            assert is_subsequence(v, idx) == is_subsequence_naive(v, letters), (letters, v)
            assert is_sas(v, idx) == is_sas_naive(v, letters, idx.sigma), (letters, v)
            assert is_mas(v, idx) == is_mas_naive(v, letters), (letters, v)
            assert is_mas_prefix(v, idx) == is_mas_prefix_naive(v, letters, idx.sigma), (letters, v)


def test_predicates_match_naive_on_ternary_words():
    for letters in canonical_words(6, 3):
        if max(letters) != 3:
            continue
        idx = index_of(letters)
        for v in _all_patterns(3, 4):
            assert is_mas(v, idx) == is_mas_naive(v, letters), (letters, v)
            assert is_mas_prefix(v, idx) == is_mas_prefix_naive(v, letters, 3), (letters, v)


def test_every_sas_is_an_mas():
    rng = random.Random(51)
    for _ in range(100):
        letters = random_letters(rng, 30, 4)
        idx = index_of(letters)
        for v in enumerate_sas(idx):
            assert is_sas(v, idx)
            assert is_mas(v, idx)


def test_sas_prefix_embeds_one_position_per_arch():
    rng = random.Random(52)
    for _ in range(60):
        idx = index_of(random_letters(rng, 30, 3))
        for v in enumerate_sas(idx):
            emb = canonical_embedding(v[:-1], idx)
            assert isinstance(emb, Embedding)
            for ell, pos in enumerate(emb.positions, start=1):
                lo, hi = idx.arches.arch_bounds(ell)
                assert lo <= pos <= hi, (idx.word.letters, v)


def test_complete_mas_prefix_fixtures():
    idx = index_of("11211111")
    assert complete_mas_prefix((2,), idx) == (2, 2)
    assert complete_mas_prefix((1,), idx) == (1,) * 8
    assert complete_mas_prefix((1, 1, 1), idx) == (1,) * 8
    assert complete_mas_prefix((2, 1), idx) == (2,) + (1,) * 6
    with pytest.raises(NotMasPrefix):
        complete_mas_prefix((2, 2), idx)  # already absent, nothing to extend
    with pytest.raises(NotMasPrefix):
        complete_mas_prefix((), idx)


def test_complete_mas_prefix_always_yields_an_mas():
    rng = random.Random(53)
    for _ in range(100):
        letters = random_letters(rng, 16, 3)
        idx = index_of(letters)
        canon = idx.word.letters
        for v in brute_mas(canon, idx.sigma):
            for cut in range(1, len(v)):
                prefix = v[:cut]
                if not is_mas_prefix(prefix, idx):
                    continue
                done = complete_mas_prefix(prefix, idx)
                assert done[: len(prefix)] == prefix
                assert is_mas(done, idx), (canon, prefix, done)


def test_mas_prefixes_of_actual_mas_words():
    # every proper prefix of an MAS must be extendable
    for letters in canonical_words(7, 3):
        idx = index_of(letters)
        for v in brute_mas(letters, max(letters)):
            for cut in range(1, len(v)):
                assert is_mas_prefix(v[:cut], idx), (letters, v, cut)


def test_sas_set_matches_brute_on_random_words():
    rng = random.Random(54)
    for _ in range(60):
        letters = random_letters(rng, 14, 3)
        idx = index_of(letters)
        canon = idx.word.letters
        want = brute_sas(canon, idx.sigma)
        got = {v for v in _all_patterns(idx.sigma, idx.arches.iota + 1) if is_sas(v, idx)}
        assert got == want
