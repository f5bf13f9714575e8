"""Longest minimal absent subsequence via a left-to-right chain DP.

For each position h that some letter enters canonically (h is the next
occurrence of w[j] after its previous occurrence j), the best chain ending
at h extends the best chain ending at any position q with j <= q < h whose
own predecessor lies before j.  The active endpoints live in a RangeMaxSet
keyed by position; an endpoint becomes visible only once the scan passes
its predecessor, which encodes the minimality windows exactly, and is
dropped once the scan passes it.  At most one endpoint per letter is ever
active, so the set stays within sigma keys.
"""

from __future__ import annotations

from array import array

from .string_index import WordIndex
from .range_max_set import RangeMaxSet


def _chain_dp(idx: WordIndex):
    """Chain lengths and predecessor links; returns (lengths, back)."""
    n = idx.n
    nxt = idx.next_array
    lengths = array("q", bytes(8 * (n + 2)))
    back = array("q", bytes(8 * (n + 2)))
    active = RangeMaxSet(capacity=idx.sigma)
    deferred: dict[int, list[int]] = {}
    for a in range(1, idx.sigma + 1):
        i = idx.occurrences[a][0]
        lengths[i] = 1
        active.insert(i, 1)
    for j in range(1, n + 1):
        h = nxt[j]
        if h <= n and len(active):
            got = active.range_max(j, h - 1)
            if got is not None:
                q, r = got
                lengths[h] = r + 1
                back[h] = q
                deferred.setdefault(q, []).append(h)
        active.delete(j)
        for s in deferred.pop(j, ()):
            active.insert(s, lengths[s])
    return lengths, back


def _best_end(lengths) -> int:
    best = 0
    h = 0
    for i in range(1, len(lengths)):
        if lengths[i] > best:
            best = lengths[i]
            h = i
    return h


def longest_mas_length(idx: WordIndex) -> int:
    """Length of the longest minimal absent subsequence."""
    lengths, _ = _chain_dp(idx)
    return lengths[_best_end(lengths)] + 1


def longest_mas(idx: WordIndex) -> tuple:
    """One longest minimal absent subsequence (smallest final position wins)."""
    lengths, back = _chain_dp(idx)
    h = _best_end(lengths)
    chain = []
    p = h
    while p:
        chain.append(p)
        p = back[p]
    chain.reverse()
    out = [idx.word.at(p) for p in chain]
    out.append(idx.word.at(h))
    return tuple(out)


def frequency_greedy_length(idx: WordIndex) -> int:
    """Baseline: repeat the most frequent letter once more than it occurs."""
    return max(len(idx.occurrences[a]) for a in range(1, idx.sigma + 1)) + 1
