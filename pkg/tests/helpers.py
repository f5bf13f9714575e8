"""Shared test helpers: word corpora and random valid skeletons."""

from __future__ import annotations

import random

from absub import SkeletonDag, build_index, build_word


def canonical_words(max_n: int, max_sigma: int):
    """All words of length 1..max_n whose letters are renamed by first occurrence.

    Every word over at most max_sigma symbols normalizes (via build_word's
    first-occurrence renaming) to exactly one word in this enumeration, so
    iterating it exercises all words up to that size.
    """

    def rec(prefix, used):
        if prefix:
            yield tuple(prefix)
        if len(prefix) == max_n:
            return
        for a in range(1, min(used + 1, max_sigma) + 1):
            prefix.append(a)
            yield from rec(prefix, max(used, a))
            prefix.pop()

    yield from rec([], 0)


def random_letters(rng: random.Random, max_n: int, max_sigma: int) -> list[int]:
    """Random word whose alphabet is exactly 1..sigma for a random sigma."""
    n = rng.randint(1, max_n)
    sigma = rng.randint(1, min(max_sigma, n))
    letters = list(range(1, sigma + 1)) + [rng.randint(1, sigma) for _ in range(n - sigma)]
    rng.shuffle(letters)
    return letters


def index_of(letters):
    """WordIndex over an int-letter sequence (or a digit string)."""
    if isinstance(letters, str):
        return build_index(build_word(letters))
    return build_index(build_word(list(letters), "ints"))


def random_skeleton(rng: random.Random, max_interior_levels: int = 5,
                    max_row: int = 6) -> SkeletonDag:
    """Random valid skeleton: singleton source/sink, 1..max_row nodes per level.

    Down edges may jump any number of levels; source edges go to distinct
    levels (possibly none, possibly straight to the sink).
    """
    m = rng.randint(1, max_interior_levels)
    levels = {"s": 0, "f": m + 1}
    orders = {0: ["s"], m + 1: ["f"]}
    label = 0
    for ell in range(1, m + 1):
        row = []
        for _ in range(rng.randint(1, max_row)):
            label += 1
            levels[label] = ell
            row.append(label)
        orders[ell] = row
    edges = []
    for lab, ell in levels.items():
        if lab in ("s", "f"):
            continue
        tl = rng.randint(ell + 1, m + 1)
        target = "f" if tl == m + 1 else rng.choice(orders[tl])
        edges.append((lab, target))
    for tl in rng.sample(range(1, m + 2), rng.randint(0, m + 1)):
        target = "f" if tl == m + 1 else rng.choice(orders[tl])
        edges.append(("s", target))
    return SkeletonDag(levels, orders, edges)


def dfs_paths(dag: SkeletonDag):
    """All source-to-sink label paths, walking expanded children depth first."""
    from absub.skeleton import expanded_children

    sink = dag.sink_label
    out = []

    def rec(lab, acc):
        if lab == sink:
            out.append(tuple(acc))
            return
        for child in expanded_children(dag, lab):
            rec(child, acc + [child])

    rec(dag.source_label, [dag.source_label])
    return out
