"""Membership predicates: subsequence, shortest absent, minimal absent, prefix.

Everything here rides on the canonical (greedy leftmost) embedding and a
positional characterization of minimal absent subsequences: v of length m+1
is minimal absent exactly when its first m letters embed canonically at
positions i_1 < ... < i_m, the last letter never occurs after i_m, and every
letter v[r] (r >= 2) already occurs inside the preceding embedding window
(i_{r-2}, i_{r-1}].  The window condition is what forces every proper
subsequence to stay present.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import AlphabetMismatch, NotMasPrefix
from .string_index import WordIndex, next_pos


@dataclass(frozen=True)
class Embedding:
    positions: tuple[int, ...]


@dataclass(frozen=True)
class Absent:
    first_unmatched: int  # 1-based index into v of the first letter that fails


def _check_letters(v, idx: WordIndex) -> None:
    sigma = idx.sigma
    for a in v:
        if not 1 <= a <= sigma:
            raise AlphabetMismatch(f"letter {a} outside the word's alphabet [1:{sigma}]")


def canonical_embedding(v, idx: WordIndex):
    """Greedy leftmost embedding of a non-empty v; Absent(r) if letter r fails."""
    _check_letters(v, idx)
    n = idx.n
    pos = 0
    out = []
    for r, a in enumerate(v, start=1):
        p = next_pos(idx, a, pos + 1)
        if p > n:
            return Absent(r)
        out.append(p)
        pos = p
    return Embedding(tuple(out))


def is_subsequence(v, idx: WordIndex) -> bool:
    """True when v embeds into the indexed word (the empty word always does)."""
    if len(v) == 0:
        return True
    return isinstance(canonical_embedding(v, idx), Embedding)


def is_sas(v, idx: WordIndex) -> bool:
    """True when v is a shortest absent subsequence: length iota+1 and absent."""
    if len(v) != idx.arches.iota + 1:
        _check_letters(v, idx)
        return False
    return not is_subsequence(v, idx)


def _window_has(idx: WordIndex, a: int, lo: int, hi: int) -> bool:
    # does letter a occur in positions [lo:hi]?
    return lo <= hi and next_pos(idx, a, lo) <= hi


def is_mas(v, idx: WordIndex) -> bool:
    """Minimal absent subsequence test via the positional characterization."""
    _check_letters(v, idx)
    m = len(v) - 1
    if m < 0:
        return False
    if m == 0:
        # a single letter is minimal absent only if it never occurs, which the
        # alphabet convention rules out
        return False
    emb = canonical_embedding(v[:m], idx)
    if not isinstance(emb, Embedding):
        return False
    i = (0,) + emb.positions  # i[r] = embedding position of v[r], i[0] = 0
    # the final letter must never occur after i[m]
    if next_pos(idx, v[m], i[m] + 1) <= idx.n:
        return False
    # every later letter must already occur in the window before its predecessor
    for r in range(2, m + 2):
        if not _window_has(idx, v[r - 1], i[r - 2] + 1, i[r - 1]):
            return False
    return True


def is_mas_prefix(v, idx: WordIndex) -> bool:
    """True when v extends to a minimal absent subsequence by appending letters.

    Concretely: v embeds canonically and each v[r] (2 <= r <= |v|) occurs in
    the window between the two preceding embedding positions.
    """
    _check_letters(v, idx)
    m = len(v)
    if m == 0:
        return False
    emb = canonical_embedding(v, idx)
    if not isinstance(emb, Embedding):
        return False
    i = (0,) + emb.positions
    for r in range(2, m + 1):
        if not _window_has(idx, v[r - 1], i[r - 2] + 1, i[r - 1]):
            return False
    return True


def complete_mas_prefix(v, idx: WordIndex) -> tuple[int, ...]:
    """Extend a prefix to a full minimal absent subsequence.

    Appends the last letter of v once more per remaining occurrence, plus one
    final copy that cannot embed.
    """
    if not is_mas_prefix(v, idx):
        raise NotMasPrefix("word is not extendable into a minimal absent subsequence")
    emb = canonical_embedding(v, idx)
    last = v[-1]
    occ = idx.occurrences[last]
    # occurrences of the last letter strictly after its embedding position
    from bisect import bisect_right

    remaining = len(occ) - bisect_right(occ, emb.positions[-1])
    return tuple(v) + (last,) * (remaining + 1)
