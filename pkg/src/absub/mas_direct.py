"""Minimal absent subsequences by direct traversal, without the pair skeleton.

The traversal mirrors the canonical prefix embeddings: a frame (i, j) means
the prefix embeds up to position i and was entered by the letter occurrence
whose window starts after j.  A frame owns a queue of position intervals;
extracting the interval maximum g appends letter w[g], which either embeds
at k = next occurrence (new frame (k, i)) or falls off the word (one output).
Space stays linear in the word and time linear in the emitted letters.

The incremental form compresses runs of forced frames (consecutive
occurrences of one letter) into single objects and emits constant-size edit
scripts.  Only the deepest pending branch of each object is kept live; when
it drains, the previous branch is recovered from the gap tables, whose
windows are untouched at that point because forced descents only ever
consume the primary interval.
"""

from __future__ import annotations

from collections import deque

from .errors import NoCurrentPath
from .string_index import WordIndex
from .skeleton import DefaultPath, Edge, EditScript, FinalLetter, StepCounter


class _Frame:
    __slots__ = ("i", "j", "letter", "queue")

    def __init__(self, i, j, letter, queue):
        self.i = i
        self.j = j
        self.letter = letter
        self.queue = queue


def _make_frame(i: int, j: int, letter: int) -> _Frame:
    q = deque()
    q.append((i, i))
    if i > j + 1:
        # the window [j+1, i-1] always branches later: w[i-1] differs from
        # w[i], so its next occurrence lands beyond i
        q.append((j + 1, i - 1))
    return _Frame(i, j, letter, q)


def dw_children(idx: WordIndex, i: int, j: int):
    """Lazy (target, letter) children of traversal node (i, j), pinned order.

    A child exists for every position g in {i} followed by [j+1 : i-1] whose
    letter does not reoccur until after i; it reads letter w[g] and moves to
    (next occurrence of w[g], i), with targets beyond the word standing for
    the sink.  The interior window is consumed in range-max splitting order.
    """
    w = (0,) + idx.word.letters
    nxt = idx.next_array
    rmq = idx.rmq
    queue = deque()
    queue.append((i, i))
    if i > j + 1:
        queue.append((j + 1, i - 1))
    while queue:
        x, y = queue.popleft()
        g = rmq.query(x, y)
        if g is None or nxt[g] <= i:
            continue
        if x <= g - 1:
            queue.append((x, g - 1))
        if g + 1 <= y:
            queue.append((g + 1, y))
        yield (nxt[g], i), w[g]


def enumerate_mas(idx: WordIndex):
    """All minimal absent subsequences as letter tuples, one DFS per letter."""
    w = (0,) + idx.word.letters
    nxt = idx.next_array
    n = idx.n
    rmq = idx.rmq
    for a in range(1, idx.sigma + 1):
        stack = [_make_frame(idx.occurrences[a][0], 0, a)]
        while stack:
            top = stack[-1]
            if top.i > n:
                yield tuple(fr.letter for fr in stack)
                stack.pop()
                while stack and not stack[-1].queue:
                    stack.pop()
                continue
            x, y = top.queue.popleft()
            g = rmq.query(x, y)
            if x <= g - 1:
                gm = rmq.query(x, g - 1)
                if nxt[gm] > top.i:
                    top.queue.append((x, g - 1))
            if g + 1 <= y:
                gm = rmq.query(g + 1, y)
                if nxt[gm] > top.i:
                    top.queue.append((g + 1, y))
            k = nxt[g]
            if k > n:
                stack.append(_Frame(n + 1, g, w[g], deque()))
            else:
                stack.append(_make_frame(k, top.i, w[g]))


def compute_gap_tables(idx: WordIndex):
    """(last_gap, last_pair) lookup tables for the incremental enumerator.

    last_gap[i]: among occurrence pairs (x, y) of letter w[i] that are
    consecutive with y - x > 1 and y <= i, the one with maximal y (None when
    no such pair exists).  last_pair[a] = (second to last, last) occurrence
    of letter a, second component 0 when a occurs once.
    """
    n = idx.n
    prev = idx.prev_array
    last_gap: list = [None] * (n + 1)
    for i in range(1, n + 1):
        p = prev[i]
        if p == 0:
            last_gap[i] = None
        elif i - p > 1:
            last_gap[i] = (p, i)
        else:
            last_gap[i] = last_gap[p]
    last_pair = [None] * (idx.sigma + 1)
    for a in range(1, idx.sigma + 1):
        occ = idx.occurrences[a]
        last_pair[a] = (occ[-2] if len(occ) > 1 else 0, occ[-1])
    return last_gap, last_pair


class _Segment:
    """A run of forced frames (ia, ja) .. (ib, jb), all carrying one letter."""

    __slots__ = ("ia", "ja", "ib", "jb", "letter", "bi", "bj", "queue", "depth0")

    def __init__(self, ia, ja, ib, jb, letter, depth0):
        self.ia = ia
        self.ja = ja
        self.ib = ib
        self.jb = jb
        self.letter = letter
        self.bi = 0
        self.bj = 0
        self.queue = None
        self.depth0 = depth0


class MasEnumerator:
    """Constant-delay edit-script walker over the direct MAS traversal."""

    def __init__(self, idx: WordIndex, stats: StepCounter | None = None):
        self.idx = idx
        self._stats = stats
        self._last_gap, self._last_pair = compute_gap_tables(idx)
        self._letter = 0
        self._segments: list[_Segment] = []
        self._pending: list[int] = []
        self._final = 0
        self._emitted = False
        self._exhausted = False

    def _tick(self, k: int = 1):
        if self._stats is not None:
            self._stats.steps += k

    def _deepest_branch(self, ia: int, ja: int, ib: int):
        """Deepest branching frame on the run ia..ib, or None."""
        lg = self._last_gap[ib]
        if lg is not None and lg[0] >= ja:
            return (lg[1], lg[0])
        if ia > ja + 1:
            return (ia, ja)
        return None

    def _arm(self, seg: _Segment, branch) -> bool:
        """Install a branch with its pristine window; report whether armed."""
        if branch is None:
            seg.bi = seg.bj = 0
            seg.queue = None
            return False
        seg.bi, seg.bj = branch
        seg.queue = deque()
        seg.queue.append((seg.bj + 1, seg.bi - 1))
        return True

    def _run_end(self, k: int, j: int, letter: int):
        """Endpoint of the forced run that starts at frame (k, j)."""
        x2, y2 = self._last_pair[letter]
        if x2 >= k:
            return y2, x2
        return k, j

    def advance(self):
        """Emit the next edit script, or None when every output was produced."""
        if self._exhausted:
            return None
        idx = self.idx
        nxt = idx.next_array
        n = idx.n
        w = (0,) + idx.word.letters
        if not self._pending:
            if self._letter >= idx.sigma:
                self._tick()
                self._exhausted = True
                return None
            self._letter += 1
            a = self._letter
            i1 = idx.occurrences[a][0]
            ib, jb = self._run_end(i1, 0, a)
            seg = _Segment(i1, 0, ib, jb, a, 0)
            self._segments = [seg]
            self._pending = [0] if self._arm(seg, self._deepest_branch(i1, 0, ib)) else []
            self._final = a
            self._emitted = True
            segs = [Edge("s", (i1, 0))]
            if (ib, jb) != (i1, 0):
                segs.append(DefaultPath((i1, 0), (ib, jb)))
            segs.append(FinalLetter(a))
            self._tick(4)
            return EditScript(0, "s", tuple(segs))
        ti = self._pending[-1]
        seg = self._segments[ti]
        del self._segments[ti + 1:]
        bi, bj = seg.bi, seg.bj
        x, y = seg.queue.popleft()
        g = idx.rmq.query(x, y)
        if x <= g - 1:
            gm = idx.rmq.query(x, g - 1)
            if nxt[gm] > bi:
                seg.queue.append((x, g - 1))
        if g + 1 <= y:
            gm = idx.rmq.query(g + 1, y)
            if nxt[gm] > bi:
                seg.queue.append((g + 1, y))
        # the path now forks at the branch frame: drop the run below it
        seg.ib, seg.jb = bi, bj
        rank = idx.occurrence_rank
        keep = seg.depth0 + rank(bi) - rank(seg.ia) + 1
        if not seg.queue:
            if (bi, bj) == (seg.ia, seg.ja):
                retreat = None
            else:
                retreat = self._deepest_branch(seg.ia, seg.ja, bj)
            if not self._arm(seg, retreat):
                self._pending.pop()
        letter = w[g]
        k = nxt[g]
        self._tick(8)
        if k > n:
            self._final = letter
            return EditScript(keep, (bi, bj), (FinalLetter(letter),))
        ib2, jb2 = self._run_end(k, bi, letter)
        child = _Segment(k, bi, ib2, jb2, letter, keep)
        self._segments.append(child)
        if self._arm(child, self._deepest_branch(k, bi, ib2)):
            self._pending.append(len(self._segments) - 1)
        self._final = letter
        segs = [Edge((bi, bj), (k, bi))]
        if (ib2, jb2) != (k, bi):
            segs.append(DefaultPath((k, bi), (ib2, jb2)))
        segs.append(FinalLetter(letter))
        return EditScript(keep, (bi, bj), tuple(segs))

    def materialize_current(self):
        """Letters of the most recently emitted subsequence."""
        if not self._emitted:
            raise NoCurrentPath("no subsequence has been enumerated yet")
        rank = self.idx.occurrence_rank
        out: list[int] = []
        for seg in self._segments:
            out.extend([seg.letter] * (rank(seg.ib) - rank(seg.ia) + 1))
        out.append(self._final)
        return tuple(out)


def enumerate_mas_incremental(idx: WordIndex, stats: StepCounter | None = None):
    """Edit-script stream over the direct traversal; replay with replay_mas."""
    walker = MasEnumerator(idx, stats=stats)
    while (script := walker.advance()) is not None:
        yield script


def replay_mas(idx: WordIndex, scripts):
    """Reconstruct the letter-tuple stream from direct-traversal edit scripts."""
    w = (0,) + idx.word.letters
    rank = idx.occurrence_rank
    cur: list[int] = []
    for sc in scripts:
        out = cur[: sc.keep]
        for seg in sc.segments:
            if isinstance(seg, Edge):
                out.append(w[seg.dst[0]])
            elif isinstance(seg, DefaultPath):
                out.extend([w[seg.src[0]]] * (rank(seg.dst[0]) - rank(seg.src[0])))
            elif isinstance(seg, FinalLetter):
                out.append(seg.letter)
            else:
                raise ValueError(f"unexpected segment {seg!r} in a word stream")
        cur = out
        yield tuple(out)
