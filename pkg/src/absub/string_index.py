"""Words over integer alphabets and the position index built on top of them.

A word is stored over the alphabet {1..sigma} where sigma is the number of
distinct symbols actually occurring in the input; symbols are renamed in
order of first occurrence.  All position arithmetic in this package is
1-based with 0 and n+1 acting as sentinels, mirroring the usual conventions
of the subsequence literature.

The index bundles everything the enumeration modules need: successor and
predecessor occurrence arrays, the arch factorization and universality
index, per-arch first/last occurrence tables, the absent-suffix distance
array, per-letter occurrence lists, and a static range-max structure over
the successor array.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field

from .errors import EmptyInput, InvalidSymbol, OutOfRange
from .rmq import RangeMaxTable


@dataclass(frozen=True)
class Word:
    """An indexed word: letters[t] is the (t+1)-th letter, each in [1:sigma]."""

    letters: tuple[int, ...]
    sigma: int
    symbols: tuple  # symbols[a-1] = original symbol for letter a
    mode: str       # "bytes" or "ints"

    def __len__(self) -> int:
        return len(self.letters)

    def at(self, i: int) -> int:
        """Letter at 1-based position i."""
        return self.letters[i - 1]

    def letter_of(self, symbol) -> int:
        """Internal letter for an original symbol; raises on foreign symbols."""
        try:
            return self.symbols.index(symbol) + 1
        except ValueError:
            raise InvalidSymbol(f"symbol {symbol!r} does not occur in the word") from None

    def render(self, letters=None) -> str:
        """Render a letter sequence (default: the word itself) using the original symbols."""
        if letters is None:
            letters = self.letters
        if self.mode == "bytes":
            return "".join(self.symbols[a - 1] for a in letters)
        return " ".join(str(self.symbols[a - 1]) for a in letters)


def build_word(raw, mode: str = "bytes") -> Word:
    """Normalize raw input into a Word.

    bytes mode: raw is a str or bytes; every character (byte) is one symbol.
    ints mode: raw is a whitespace-separated string of positive integers or
    an iterable of ints.  Symbols are renamed to 1..sigma by first occurrence.
    """
    if mode == "bytes":
        if isinstance(raw, (bytes, bytearray)):
            raw = raw.decode("latin-1")
        if not isinstance(raw, str):
            raise InvalidSymbol("bytes mode expects str or bytes input")
        symbols = list(raw)
    elif mode == "ints":
        if isinstance(raw, str):
            tokens = raw.split()
        else:
            tokens = list(raw)
        symbols = []
        for tok in tokens:
            if isinstance(tok, int):
                val = tok
            else:
                try:
                    val = int(tok)
                except ValueError:
                    raise InvalidSymbol(f"not an integer symbol: {tok!r}") from None
            if val <= 0:
                raise InvalidSymbol(f"symbols must be positive integers, got {val}")
            symbols.append(val)
    else:
        raise ValueError(f"unknown alphabet mode: {mode!r}")
    if not symbols:
        raise EmptyInput("the input word is empty")
    order = {}
    letters = []
    for sym in symbols:
        code = order.get(sym)
        if code is None:
            code = len(order) + 1
            order[sym] = code
        letters.append(code)
    return Word(tuple(letters), len(order), tuple(order), mode)


@dataclass(frozen=True)
class ArchFactorization:
    """Greedy left-to-right factorization into alphabet-complete arches."""

    ends: tuple[int, ...]   # ends[t] = last position of arch t+1
    rest_start: int         # first position after the final arch (n+1 if no rest)

    @property
    def iota(self) -> int:
        """Universality index: the number of arches."""
        return len(self.ends)

    def arch_bounds(self, ell: int) -> tuple[int, int]:
        """Inclusive positions [start, end] of arch ell (1-based)."""
        start = self.ends[ell - 2] + 1 if ell >= 2 else 1
        return start, self.ends[ell - 1]


@dataclass
class WordIndex:
    word: Word
    arches: ArchFactorization
    next_array: list[int]        # next_array[i] = next occurrence of word.at(i) after i, else n+1
    prev_array: list[int]        # prev_array[i] = previous occurrence, else 0
    dist: list[int]              # dist[i] = shortest absent subsequence of w[i:n] starting at w[i]
    first_pos_arch: list[list[int]]  # [ell][a] -> first occurrence of a in arch ell (0 if none)
    last_pos_arch: list[list[int]]
    occurrences: list[list[int]]     # occurrences[a] = sorted positions of letter a
    rmq: RangeMaxTable               # leftmost range-argmax over next_array
    _nextpos: list | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        return len(self.word)

    @property
    def sigma(self) -> int:
        return self.word.sigma

    def occurrence_rank(self, i: int) -> int:
        """0-based rank of position i within the occurrence list of its own letter."""
        occ = self.occurrences[self.word.at(i)]
        return bisect_left(occ, i)

    def nextpos_matrix(self) -> list:
        """Full successor matrix: row a, column i = next occurrence of a at or after i.

        Needs Theta(n * sigma) memory, so it is built lazily and kept only
        once requested (the pair-skeleton construction is its sole caller).
        """
        if self._nextpos is None:
            n = len(self.word)
            letters = self.word.letters
            rows = [None] * (self.sigma + 1)
            for a in range(1, self.sigma + 1):
                rows[a] = [n + 1] * (n + 2)
            nxt = [n + 1] * (self.sigma + 1)
            for i in range(n, 0, -1):
                nxt[letters[i - 1]] = i
                for a in range(1, self.sigma + 1):
                    rows[a][i] = nxt[a]
            self._nextpos = rows
        return self._nextpos


def build_index(word: Word) -> WordIndex:
    """Precompute all positional tables for a word in linear time."""
    n = len(word)
    sigma = word.sigma
    letters = (0,) + word.letters  # 1-based access

    prev_array = [0] * (n + 1)
    occurrences = [None] + [[] for _ in range(sigma)]
    last = [0] * (sigma + 1)
    for i in range(1, n + 1):
        a = letters[i]
        prev_array[i] = last[a]
        last[a] = i
        occurrences[a].append(i)

    next_array = [n + 1] * (n + 2)
    nxt = [n + 1] * (sigma + 1)
    for i in range(n, 0, -1):
        a = letters[i]
        next_array[i] = nxt[a]
        nxt[a] = i

    # greedy arches: close an arch as soon as the running set is complete
    ends = []
    seen = [False] * (sigma + 1)
    distinct = 0
    for i in range(1, n + 1):
        a = letters[i]
        if not seen[a]:
            seen[a] = True
            distinct += 1
            if distinct == sigma:
                ends.append(i)
                seen = [False] * (sigma + 1)
                distinct = 0
    arches = ArchFactorization(tuple(ends), (ends[-1] + 1) if ends else 1)

    # dist[i] = 2 + number of complete co-arches of w[i+1:n]; the co-arch count
    # accumulates right to left because suffix boundaries never move
    dist = [0] * (n + 1)
    seen = [False] * (sigma + 1)
    distinct = 0
    done = 0
    for i in range(n, 0, -1):
        dist[i] = done + 2
        a = letters[i]
        if not seen[a]:
            seen[a] = True
            distinct += 1
            if distinct == sigma:
                done += 1
                seen = [False] * (sigma + 1)
                distinct = 0

    k = arches.iota
    first_pos_arch = [[0] * (sigma + 1) for _ in range(k + 1)]
    last_pos_arch = [[0] * (sigma + 1) for _ in range(k + 1)]
    for ell in range(1, k + 1):
        start, end = (ends[ell - 2] + 1 if ell >= 2 else 1), ends[ell - 1]
        frow = first_pos_arch[ell]
        lrow = last_pos_arch[ell]
        for i in range(start, end + 1):
            a = letters[i]
            if frow[a] == 0:
                frow[a] = i
            lrow[a] = i

    return WordIndex(
        word=word,
        arches=arches,
        next_array=next_array,
        prev_array=prev_array,
        dist=dist,
        first_pos_arch=first_pos_arch,
        last_pos_arch=last_pos_arch,
        occurrences=occurrences,
        rmq=RangeMaxTable(next_array[: n + 1]),
    )


def next_pos(idx: WordIndex, a: int, i: int) -> int:
    """Smallest occurrence of letter a at or after position i (n+1 if none)."""
    n = idx.n
    if not 1 <= a <= idx.sigma:
        raise OutOfRange(f"letter {a} outside [1:{idx.sigma}]")
    if not 1 <= i <= n + 1:
        raise OutOfRange(f"position {i} outside [1:{n + 1}]")
    occ = idx.occurrences[a]
    t = bisect_left(occ, i)
    return occ[t] if t < len(occ) else n + 1


def range_max_next(idx: WordIndex, i: int, j: int):
    """Leftmost position in [i:j] maximizing next_array, or None for an empty range."""
    return idx.rmq.query(i, j)
