"""Internal consistency of the slow reference implementations."""

import random

import pytest

from absub.errors import TooLarge
from absub.oracle import (
    GUARD_N,
    GUARD_N_DEFINITION,
    brute_iota,
    brute_longest_mas,
    brute_mas,
    brute_mas_by_definition,
    brute_sas,
    brute_sas_count,
    is_mas_naive,
    is_mas_prefix_naive,
    is_sas_naive,
    is_subsequence_naive,
)

from helpers import canonical_words, random_letters


def test_subsequence_fixtures():
    w = (1, 2, 2, 3, 3, 1, 3)
    assert is_subsequence_naive((), w)
    assert is_subsequence_naive((1, 3, 1), w)
    assert not is_subsequence_naive((3, 2), w)
    assert not is_subsequence_naive((1, 1, 1), w)


def test_sas_fixtures():
    w = (1, 2, 2, 3, 3, 1, 3)
    assert brute_iota(w, 3) == 1
    assert brute_sas_count(w, 3) == 1
    assert brute_sas(w, 3) == {(3, 2)}
    assert is_sas_naive((3, 2), w, 3)
    assert not is_sas_naive((3, 2, 1), w, 3)


def test_mas_fixture():
    w = (1, 1, 2, 1, 1, 1, 1, 1)
    want = {(2, 2), (1, 1, 1, 2), (2, 1, 1, 1, 1, 1, 1), (1,) * 8}
    assert brute_mas(w, 2) == want
    assert brute_mas_by_definition(w, 2) == want
    assert brute_longest_mas(w, 2) == 8
    assert is_mas_naive((2, 2), w)
    assert not is_mas_naive((2, 2, 2), w)
    assert is_mas_prefix_naive((1, 1), w, 2)
    assert not is_mas_prefix_naive((1,) * 8, w, 2)  # complete, not extendable


def test_the_two_mas_oracles_agree_exhaustively():
    # independent derivations: canonical-embedding search vs the definition
    for letters in canonical_words(7, 3):
        sigma = max(letters)
        assert brute_mas(letters, sigma) == brute_mas_by_definition(letters, sigma), letters


def test_the_two_mas_oracles_agree_on_random_words():
    rng = random.Random(41)
    for _ in range(150):
        letters = tuple(random_letters(rng, GUARD_N_DEFINITION, 4))
        sigma = max(letters)
        assert brute_mas(letters, sigma) == brute_mas_by_definition(letters, sigma)


def test_every_brute_mas_word_passes_the_naive_predicate():
    rng = random.Random(42)
    for _ in range(80):
        letters = tuple(random_letters(rng, 14, 3))
        sigma = max(letters)
        mas = brute_mas(letters, sigma)
        assert all(is_mas_naive(v, letters) for v in mas)
        sas = brute_sas(letters, sigma)
        assert len(sas) == brute_sas_count(letters, sigma)
        assert all(is_mas_naive(v, letters) for v in sas)  # every SAS is an MAS
        assert sas <= mas


def test_guards_raise_too_large():
    big = tuple(1 for _ in range(GUARD_N + 1))
    with pytest.raises(TooLarge):
        brute_iota(big, 1)
    with pytest.raises(TooLarge):
        brute_mas_by_definition(tuple(1 for _ in range(GUARD_N_DEFINITION + 1)), 1)
