"""Slow reference implementations used to validate the fast code paths.

Everything here works straight off a letter tuple with plain scans and
exhaustive search; nothing imports the indexed data structures.  Guards
raise TooLarge instead of silently grinding, so callers can fall back to
count-level comparisons for pathological inputs.
"""

from __future__ import annotations

from .errors import TooLarge

GUARD_N = 40
GUARD_N_DEFINITION = 12


def _guard(letters, limit=GUARD_N):
    if len(letters) > limit:
        raise TooLarge(f"oracle guard: {len(letters)} > {limit} positions")


def is_subsequence_naive(pattern, letters) -> bool:
    pos = 0
    n = len(letters)
    for a in pattern:
        while pos < n and letters[pos] != a:
            pos += 1
        if pos == n:
            return False
        pos += 1
    return True


def _successor_table(letters, sigma):
    """table[p][a] = smallest 1-based position > p holding letter a, else n+1."""
    n = len(letters)
    table = [None] * (n + 1)
    cur = [n + 1] * (sigma + 1)
    table[n] = tuple(cur)
    for p in range(n - 1, -1, -1):
        cur[letters[p]] = p + 1
        table[p] = tuple(cur)
    return table


def _present_profile(letters, sigma, length):
    """g[r][p] = number of length-(length-r) words embeddable from position p."""
    n = len(letters)
    table = _successor_table(letters, sigma)
    g = [[0] * (n + 1) for _ in range(length + 1)]
    g[length] = [1] * (n + 1)
    for r in range(length - 1, -1, -1):
        row = g[r]
        nxt_row = g[r + 1]
        for p in range(n + 1):
            tp = table[p]
            total = 0
            for a in range(1, sigma + 1):
                q = tp[a]
                if q <= n:
                    total += nxt_row[q]
            row[p] = total
    return g, table


def brute_iota(letters, sigma) -> int:
    """Largest L such that every length-L word over [1:sigma] is a subsequence."""
    _guard(letters)
    n = len(letters)
    for length in range(1, n + 2):
        g, _ = _present_profile(letters, sigma, length)
        if g[0][0] < sigma ** length:
            return length - 1
    raise AssertionError("unreachable: length n+1 words never all embed")


def brute_sas_count(letters, sigma) -> int:
    """Number of shortest absent subsequences, by complement counting."""
    _guard(letters)
    length = brute_iota(letters, sigma) + 1
    g, _ = _present_profile(letters, sigma, length)
    return sigma ** length - g[0][0]


def brute_sas(letters, sigma, cap: int = 100_000):
    """Set of all shortest absent subsequences (letter tuples)."""
    _guard(letters)
    length = brute_iota(letters, sigma) + 1
    g, table = _present_profile(letters, sigma, length)
    n = len(letters)
    total_absent = sigma ** length - g[0][0]
    if total_absent > cap:
        raise TooLarge(f"{total_absent} shortest absent subsequences exceed cap {cap}")
    out = []
    prefix = [0] * length

    def absent_below(r, p):
        alive = g[r][p] if p <= n else 0
        return sigma ** (length - r) - alive

    def rec(r, p):
        if r == length:
            out.append(tuple(prefix))
            return
        for a in range(1, sigma + 1):
            q = table[p][a] if p <= n else n + 1
            if absent_below(r + 1, q) == 0:
                continue
            prefix[r] = a
            rec(r + 1, q)

    rec(0, 0)
    return set(out)


def brute_mas(letters, sigma, cap: int = 200_000):
    """Set of all minimal absent subsequences, by canonical-embedding search."""
    _guard(letters)
    n = len(letters)

    def next_occ(a, lo):
        for p in range(lo, n + 1):
            if letters[p - 1] == a:
                return p
        return n + 1

    def occurs_between(a, lo, hi):
        return any(letters[p - 1] == a for p in range(lo, hi + 1))

    out = []
    prefix = []

    def rec(p2, p):
        if len(out) > cap:
            raise TooLarge(f"minimal absent subsequences exceed cap {cap}")
        for a in range(1, sigma + 1):
            # the appended letter must fall inside the previous window
            if not occurs_between(a, p2 + 1, p):
                continue
            q = next_occ(a, p + 1)
            if q > n:
                out.append(tuple(prefix) + (a,))
            else:
                prefix.append(a)
                rec(p, q)
                prefix.pop()

    for a in range(1, sigma + 1):
        i = next_occ(a, 1)
        if i > n:
            continue
        prefix.append(a)
        rec(0, i)
        prefix.pop()
    return set(out)


def brute_mas_by_definition(letters, sigma):
    """Set of all minimal absent subsequences, straight from the definition."""
    _guard(letters, GUARD_N_DEFINITION)
    subs = {()}
    for a in letters:
        subs |= {s + (a,) for s in subs}
    out = set()
    for s in subs:
        for a in range(1, sigma + 1):
            v = s + (a,)
            if v in subs:
                continue
            if all(v[:t] + v[t + 1:] in subs for t in range(len(v))):
                out.add(v)
    return out


def brute_longest_mas(letters, sigma) -> int:
    """Length of the longest minimal absent subsequence."""
    return max(len(v) for v in brute_mas(letters, sigma))


def is_sas_naive(pattern, letters, sigma) -> bool:
    return (len(pattern) == brute_iota(letters, sigma) + 1
            and not is_subsequence_naive(pattern, letters))


def is_mas_naive(pattern, letters) -> bool:
    """Absent, and present after deleting any single letter."""
    if is_subsequence_naive(pattern, letters):
        return False
    return all(
        is_subsequence_naive(pattern[:t] + pattern[t + 1:], letters)
        for t in range(len(pattern))
    )


def is_mas_prefix_naive(pattern, letters, sigma) -> bool:
    """True when some strictly longer minimal absent subsequence starts with it."""
    pattern = tuple(pattern)
    return any(
        len(v) > len(pattern) and v[: len(pattern)] == pattern
        for v in brute_mas(letters, sigma)
    )
