"""Shortest absent subsequences, enumerated through a leveled skeleton.

Every shortest absent subsequence has length iota + 1, where iota is the
number of arches.  Each one decomposes as one position per arch (letters
picked at per-arch first occurrences that still admit a shortest completion)
plus a final letter missing from the leftover tail.  The skeleton encodes
all of them: level ell holds the usable positions of arch ell, one extra
level holds the candidate final letters, and the expanded source-sink paths
are in bijection with the shortest absent subsequences.
"""

from __future__ import annotations

from .string_index import WordIndex
from .skeleton import (SkeletonDag, StepCounter, count_paths, enumerate_paths,
                       enumerate_paths_incremental, replay_paths)


def build_sas_skeleton(idx: WordIndex) -> SkeletonDag:
    """Skeleton whose expanded paths decode to the shortest absent subsequences."""
    w = (0,) + idx.word.letters
    n = idx.n
    k = idx.arches.iota
    dist = idx.dist

    rest_has = [False] * (idx.sigma + 1)
    for i in range(idx.arches.rest_start, n + 1):
        rest_has[w[i]] = True

    # per arch: positions that can start the remaining shortest completion
    # (f-sets) and positions whose letter ends an arch-aligned prefix (g-sets)
    g_sets: list = [None] * (k + 1)
    for ell in range(1, k + 1):
        start, end = idx.arches.arch_bounds(ell)
        lrow = idx.last_pos_arch[ell]
        cand = [i for i in range(start, end + 1) if lrow[w[i]] == i]
        if ell < k:
            frow = idx.first_pos_arch[ell + 1]
            need = k - ell + 1
            g_sets[ell] = [i for i in cand if dist[frow[w[i]]] == need]
        else:
            g_sets[ell] = [i for i in cand if not rest_has[w[i]]]
        if not g_sets[ell]:
            raise ValueError(f"arch {ell} contributes no skeleton nodes")

    start, end = idx.arches.arch_bounds(1)
    frow = idx.first_pos_arch[1]
    f1 = [i for i in range(start, end + 1) if frow[w[i]] == i and dist[i] == k + 1]
    if not f1:
        raise ValueError("arch 1 contributes no skeleton nodes")

    def target(ell: int, gpos: int) -> int:
        a = w[gpos]
        return idx.first_pos_arch[ell + 1][a] if ell < k else n + a

    levels: dict = {"s": 0, "f": k + 2}
    sibling: dict = {0: ["s"], k + 2: ["f"]}
    sibling[1] = sorted(f1, reverse=True)
    for i in f1:
        levels[i] = 1
    for ell in range(1, k + 1):
        order = [target(ell, gp) for gp in reversed(g_sets[ell])]
        sibling[ell + 1] = order
        for t in order:
            levels[t] = ell + 1

    edges: list = [("s", max(f1))]
    for ell in range(1, k + 1):
        garr = g_sets[ell]
        p = 0
        for i in sorted(sibling[ell]):
            while p + 1 < len(garr) and garr[p + 1] <= i:
                p += 1
            if garr[p] > i:
                raise ValueError(f"position {i} has no anchor in arch {ell}")
            edges.append((i, target(ell, garr[p])))
    for t in sibling[k + 1]:
        edges.append((t, "f"))
    return SkeletonDag(levels, sibling, edges)


def decode_sas_path(idx: WordIndex, path) -> tuple:
    """Letters of the subsequence encoded by one skeleton path."""
    n = idx.n
    out = []
    for node in path[1:-1]:
        out.append(idx.word.at(node) if node <= n else node - n)
    return tuple(out)


def enumerate_sas(idx: WordIndex, dag: SkeletonDag | None = None):
    """All shortest absent subsequences, as letter tuples, duplicate-free."""
    if dag is None:
        dag = build_sas_skeleton(idx)
    for path in enumerate_paths(dag):
        yield decode_sas_path(idx, path)


def enumerate_sas_incremental(idx: WordIndex, dag: SkeletonDag | None = None,
                              stats: StepCounter | None = None):
    """Edit-script stream over skeleton paths; replay with replay_sas."""
    if dag is None:
        dag = build_sas_skeleton(idx)
    yield from enumerate_paths_incremental(dag, stats)


def replay_sas(idx: WordIndex, scripts, dag: SkeletonDag | None = None):
    """Decode an edit-script stream back into letter tuples."""
    if dag is None:
        dag = build_sas_skeleton(idx)
    for path in replay_paths(dag, scripts):
        yield decode_sas_path(idx, path)


def count_sas(idx: WordIndex, dag: SkeletonDag | None = None) -> int:
    """Exact number of shortest absent subsequences."""
    if dag is None:
        dag = build_sas_skeleton(idx)
    return count_paths(dag)
