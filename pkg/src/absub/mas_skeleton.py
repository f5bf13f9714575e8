"""Minimal absent subsequences through a pair-labeled skeleton.

Nodes are pairs (i, j): the canonical embedding of the current prefix ends
at position i, and j is the last occurrence before or at i of the letter
that gets appended next.  Level i holds one node per member of the
last-occurrence set of w[1:i], in increasing order of j.  A stored edge
from (i, j) follows the next occurrence k of w[j] after i; in the expanded
DAG it fans out to every sibling of the target whose j-component exceeds i.
Paths decode to minimal absent subsequences: the visited letters w[i]
followed by one final letter w[j] taken from the last node.

This representation needs Theta(n * sigma) space, so it serves counting and
streaming on moderate inputs; the direct enumerator in mas_direct avoids the
quadratic footprint.
"""

from __future__ import annotations

from bisect import bisect_right

from .string_index import WordIndex, next_pos
from .skeleton import (SkeletonDag, StepCounter, count_paths, enumerate_paths,
                       enumerate_paths_incremental, replay_paths)


def compute_p_sets(idx: WordIndex) -> list:
    """rows[i] = positions whose letter does not reoccur in w[j+1:i], ascending.

    Row i lists, for each letter of alph(w[1:i]), the start of the smallest
    window ending at i that still contains that letter; equivalently the
    last occurrence at or before i.

    Row i is row i-1 with the stale occurrence of w[i] dropped and i
    appended, so consecutive rows differ in at most two places.
    """
    n = idx.n
    prev = idx.prev_array
    rows: list = [None] * (n + 1)
    rows[0] = []
    for i in range(1, n + 1):
        p = prev[i]
        if p:
            rows[i] = [q for q in rows[i - 1] if q != p]
        else:
            rows[i] = rows[i - 1][:]
        rows[i].append(i)
    return rows


def build_mas_skeleton(idx: WordIndex) -> SkeletonDag:
    """Skeleton whose expanded paths decode to the minimal absent subsequences."""
    w = (0,) + idx.word.letters
    n = idx.n
    rows = compute_p_sets(idx)

    # forward reachability: per level keep the suffix of siblings that some
    # source edge or stored edge can fan out to
    INF = float("inf")
    min_reach = [INF] * (n + 2)
    for a in range(1, idx.sigma + 1):
        min_reach[idx.occurrences[a][0]] = 0
    hops: list = [None] * (n + 1)
    for i in range(1, n + 1):
        if min_reach[i] is INF:
            raise ValueError(f"level {i} lost all nodes")
        row = rows[i]
        level_hops = []
        for t in range(min_reach[i], len(row)):
            j = row[t]
            k = next_pos(idx, w[j], i + 1)
            if k <= n:
                tpos = bisect_right(rows[k], i)
                level_hops.append((j, k, tpos))
                if tpos < min_reach[k]:
                    min_reach[k] = tpos
            else:
                level_hops.append((j, n + 1, 0))
        hops[i] = level_hops

    levels: dict = {"s": 0, "f": n + 1}
    sibling: dict = {0: ["s"], n + 1: ["f"]}
    edges: list = []
    for a in range(1, idx.sigma + 1):
        i = idx.occurrences[a][0]
        edges.append(("s", (i, rows[i][0])))
    for i in range(1, n + 1):
        row = rows[i]
        sibling[i] = [(i, row[t]) for t in range(min_reach[i], len(row))]
        for node in sibling[i]:
            levels[node] = i
        for j, k, tpos in hops[i]:
            if k <= n:
                edges.append(((i, j), (k, rows[k][tpos])))
            else:
                edges.append(((i, j), "f"))
    return SkeletonDag(levels, sibling, edges)


def decode_mas_path(idx: WordIndex, path) -> tuple:
    """Letters of the minimal absent subsequence encoded by one path."""
    out = [idx.word.at(i) for i, _ in path[1:-1]]
    out.append(idx.word.at(path[-2][1]))
    return tuple(out)


def enumerate_mas_via_skeleton(idx: WordIndex, dag: SkeletonDag | None = None):
    """All minimal absent subsequences, as letter tuples, duplicate-free."""
    if dag is None:
        dag = build_mas_skeleton(idx)
    for path in enumerate_paths(dag):
        yield decode_mas_path(idx, path)


def enumerate_mas_via_skeleton_incremental(idx: WordIndex, dag: SkeletonDag | None = None,
                                       stats: StepCounter | None = None):
    """Edit-script stream over skeleton paths; replay with replay_mas_via_skeleton."""
    if dag is None:
        dag = build_mas_skeleton(idx)
    yield from enumerate_paths_incremental(dag, stats)


def replay_mas_via_skeleton(idx: WordIndex, scripts, dag: SkeletonDag | None = None):
    """Decode an edit-script stream back into letter tuples."""
    if dag is None:
        dag = build_mas_skeleton(idx)
    for path in replay_paths(dag, scripts):
        yield decode_mas_path(idx, path)


def count_mas(idx: WordIndex, dag: SkeletonDag | None = None) -> int:
    """Exact number of minimal absent subsequences."""
    if dag is None:
        dag = build_mas_skeleton(idx)
    return count_paths(dag)
