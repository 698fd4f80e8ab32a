"""Distant rare-frequent thresholds and the pumping factor they guarantee.

All routines are generic over words: a word is any sequence of hashable
letters (strings, ints, arrow indices).
"""

from __future__ import annotations

from collections import Counter
from typing import Optional, Sequence

from .errors import HypothesisViolated, NoSuchFactor


def is_distant(word: Sequence, n: int, m: int) -> bool:
    """Is n an m-distant rare-frequent threshold for the word?

    True iff the total number of occurrences of rare letters (count <= n) is
    at most n/m - 1; compared exactly in integers, no rounding.
    """
    if n < 1 or m < 1:
        raise ValueError("n and m must be >= 1")
    counts = Counter(word)
    rare_sum = sum(c for c in counts.values() if c <= n)
    return m * rare_sum <= n - m


def threshold_bound(alphabet_size: int, m: int) -> int:
    """The guaranteed upper bound (m'd)^(2^d+1) with d = 2*|alphabet|."""
    d = 2 * alphabet_size
    mp = (m + 1) * m
    return (mp * d) ** (2 ** d + 1)


def find_distant_threshold(u1: Sequence, u2: Sequence, m: int,
                           alphabet: Optional[Sequence] = None) -> int:
    """A threshold that is m-distant for both words, by the pigeonhole scan.

    Candidates are (m'd)^1, (m'd)^2, ... with d = 2|alphabet| and
    m' = (m+1)m; the first candidate c whose rare coordinates of the combined
    count tuple sum to at most c/m' is returned.  The rare sets grow
    monotonically along the candidates, so this triggers within d+2 steps and
    the result never exceeds (m'd)^(2^d+1).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if alphabet is None:
        alphabet = sorted(set(u1) | set(u2), key=repr)
    counts1 = Counter(u1)
    counts2 = Counter(u2)
    T = [counts1[a] for a in alphabet] + [counts2[a] for a in alphabet]
    d = len(T)
    mp = (m + 1) * m
    if d == 0:
        # no letters at all: any threshold >= m works, take the least
        return m
    base = mp * d
    candidate = 1
    for _ in range(2 ** d + 1):
        candidate *= base
        rare_sum = sum(t for t in T if t <= candidate)
        if mp * rare_sum <= candidate:
            return candidate
    raise AssertionError("pigeonhole scan must terminate")  # pragma: no cover


def minimal_distant_threshold(u1: Sequence, u2: Sequence, m: int,
                              scan_cap: int = 10_000) -> Optional[int]:
    """Least n' in [1, scan_cap] that is m-distant for both words, else None."""
    for n in range(1, scan_cap + 1):
        if is_distant(u1, n, m) and is_distant(u2, n, m):
            return n
    return None


def pump_factor(word: Sequence, n: int, m: int, a) -> tuple[int, int]:
    """Leftmost maximal rare-letter-free factor with >= m+1 occurrences of a.

    Returns the half-open span (start, end).  Existence is guaranteed when n
    is m-distant for the word and a is frequent in it; preconditions are
    checked and NoSuchFactor is only reachable when they fail.
    """
    counts = Counter(word)
    if counts[a] <= n:
        raise HypothesisViolated(f"letter {a!r} is not frequent for n = {n}")
    if not is_distant(word, n, m):
        raise HypothesisViolated(f"{n} is not an {m}-distant threshold")
    start = 0
    for i, c in enumerate(word):
        if counts[c] <= n:
            if sum(1 for j in range(start, i) if word[j] == a) >= m + 1:
                return (start, i)
            start = i + 1
    if sum(1 for j in range(start, len(word)) if word[j] == a) >= m + 1:
        return (start, len(word))
    raise NoSuchFactor("no qualifying factor; preconditions must have failed")
