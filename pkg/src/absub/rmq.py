"""Static range-maximum queries with leftmost tie-breaking.

Built once over an integer array, ``RangeMaxTable`` answers "smallest
position of the maximum value inside [i:j]" in constant time per query.
It uses a block decomposition: one argmax per 32-element block plus a
doubling table over the block argmaxes.  Construction cost is linear in
the array length up to the tiny table over n/32 blocks, and memory stays
linear, which keeps million-letter inputs cheap.
"""

from __future__ import annotations

import numpy as np

_BLOCK = 32
_NEG = np.iinfo(np.int64).min


class RangeMaxTable:
    """Leftmost-argmax range queries over a fixed integer array.

    Positions are 1-based; index 0 of the input is ignored so callers can
    pass arrays that are already laid out that way.
    """

    def __init__(self, values):
        n = len(values) - 1
        self.n = n
        v = np.asarray(values[1:], dtype=np.int64)
        self._v = v
        if n == 0:
            self._levels = []
            return
        nb = (n + _BLOCK - 1) // _BLOCK
        pad = nb * _BLOCK - n
        padded = np.concatenate([v, np.full(pad, _NEG, dtype=np.int64)]) if pad else v
        grid = padded.reshape(nb, _BLOCK)
        block_pos = grid.argmax(axis=1) + np.arange(nb, dtype=np.int64) * _BLOCK
        levels = [block_pos]
        k = 1
        while (1 << k) <= nb:
            prev = levels[-1]
            step = 1 << (k - 1)
            width = nb - (1 << k) + 1
            left = prev[:width]
            right = prev[step:step + width]
            # >= keeps the left (earlier) argmax on ties
            levels.append(np.where(v[left] >= v[right], left, right))
            k += 1
        self._levels = levels

    def query(self, i: int, j: int):
        """Smallest position of the maximum of values[i:j], or None if empty."""
        n = self.n
        if i < 1:
            i = 1
        if j > n:
            j = n
        if i > j:
            return None
        lo = i - 1
        hi = j - 1
        v = self._v
        bl = lo // _BLOCK
        br = hi // _BLOCK
        if bl == br:
            return lo + int(v[lo:hi + 1].argmax()) + 1
        cands = [lo + int(v[lo:(bl + 1) * _BLOCK].argmax())]
        if br - bl >= 2:
            b0 = bl + 1
            b1 = br - 1
            k = (b1 - b0 + 1).bit_length() - 1
            lev = self._levels[k]
            cands.append(int(lev[b0]))
            cands.append(int(lev[b1 - (1 << k) + 1]))
        start = br * _BLOCK
        cands.append(start + int(v[start:hi + 1].argmax()))
        best = min(cands, key=lambda p: (-int(v[p]), p))
        return best + 1
