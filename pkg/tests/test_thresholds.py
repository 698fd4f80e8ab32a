from __future__ import annotations

import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zgkit.errors import HypothesisViolated
from zgkit.thresholds import (
    find_distant_threshold,
    is_distant,
    minimal_distant_threshold,
    pump_factor,
    threshold_bound,
)


def oracle_is_distant(word, n, m):
    """Exact rational reading of the definition, independent arithmetic."""
    counts = Counter(word)
    rare_sum = sum(c for c in counts.values() if c <= n)
    return Fraction(rare_sum) <= Fraction(n, m) - 1


def test_is_distant_examples():
    assert is_distant("a" * 10, 4, 2)
    assert is_distant("b" + "a" * 10, 4, 2)
    assert not is_distant("bb" + "a" * 10, 4, 2)


@given(st.text(alphabet="abc", max_size=30), st.integers(1, 10), st.integers(1, 4))
def test_is_distant_matches_rational_oracle(w, n, m):
    assert is_distant(w, n, m) == oracle_is_distant(w, n, m)


def test_find_distant_threshold_hand_trace():
    # u1 = u2 = aaa, m = 1: d=2, m'=2, candidates 4, 16, ...; 16 is the answer
    n = find_distant_threshold("aaa", "aaa", 1)
    assert n == 16
    assert is_distant("aaa", n, 1)


def test_find_distant_threshold_empty_words():
    for m in (1, 2, 3):
        n = find_distant_threshold("", "", m)
        assert is_distant("", n, m) or n >= m  # empty word: rare sum 0 <= n/m - 1
        assert is_distant("", n, m)


def test_find_distant_threshold_first_candidate_when_trivial():
    # one rare letter, tiny sums: the very first candidate already qualifies
    n = find_distant_threshold("a" * 50, "a" * 50, 1)
    assert n == find_distant_threshold("a" * 50, "a" * 50, 1)
    assert is_distant("a" * 50, n, 1)


@settings(max_examples=120, deadline=None)
@given(st.text(alphabet="ab", max_size=40), st.text(alphabet="ab", max_size=40),
       st.integers(1, 3))
def test_find_distant_threshold_guarantees(u1, u2, m):
    n = find_distant_threshold(u1, u2, m)
    assert n > 0
    if set(u1) | set(u2):
        assert n <= threshold_bound(len(set(u1) | set(u2)), m)
    assert is_distant(u1, n, m)
    assert is_distant(u2, n, m)


def test_minimal_distant_threshold_examples():
    assert minimal_distant_threshold("a" * 10, "a" * 10, 1) == 1
    assert minimal_distant_threshold("b" + "a" * 10, "b" + "a" * 10, 1) == 2
    # all-frequent at n=1 already makes bbbb distant: rare sum 0 <= 0
    assert minimal_distant_threshold("bbbb", "bbbb", 1, scan_cap=3) == 1


def test_minimal_distant_threshold_not_found():
    # one of everything: rare sums track n too closely below the cap
    w = "abc"
    assert minimal_distant_threshold(w, w, 2, scan_cap=4) is None


def test_minimal_is_minimal():
    rng = random.Random(3)
    for _ in range(50):
        w1 = "".join(rng.choice("ab") for _ in range(rng.randrange(0, 25)))
        w2 = "".join(rng.choice("ab") for _ in range(rng.randrange(0, 25)))
        n = minimal_distant_threshold(w1, w2, 2, scan_cap=200)
        if n is not None:
            assert is_distant(w1, n, 2) and is_distant(w2, n, 2)
            for smaller in range(1, n):
                assert not (is_distant(w1, smaller, 2) and is_distant(w2, smaller, 2))


def test_pump_factor_examples():
    assert pump_factor("a" * 10, 4, 2, "a") == (0, 10)
    assert pump_factor("b" + "a" * 10, 4, 2, "a") == (1, 11)
    assert pump_factor("a" * 5 + "b" + "a" * 5, 4, 2, "a") == (0, 5)


def test_pump_factor_rejects_bad_preconditions():
    with pytest.raises(HypothesisViolated):
        pump_factor("ab", 4, 2, "a")  # a not frequent
    with pytest.raises(HypothesisViolated):
        pump_factor("bbb" + "a" * 5, 4, 2, "a")  # threshold not distant


def check_pump_postconditions(word, n, m, a, span):
    start, end = span
    factor = word[start:end]
    counts = Counter(word)
    assert all(counts[c] > n for c in factor), "factor must be rare-free"
    assert factor.count(a) >= m + 1
    # maximality: the factor is delimited by rare letters or word boundaries
    if start > 0:
        assert counts[word[start - 1]] <= n
    if end < len(word):
        assert counts[word[end]] <= n
    # leftmost: no earlier maximal rare-free factor qualifies
    pos = 0
    for i, c in enumerate(word[:start]):
        if counts[c] <= n:
            assert word[pos:i].count(a) < m + 1
            pos = i + 1


def test_pump_factor_random():
    rng = random.Random(11)
    done = 0
    for _ in range(300):
        w = "".join(rng.choice("aab") for _ in range(rng.randrange(1, 40)))
        m = rng.randrange(1, 4)
        n = minimal_distant_threshold(w, w, m, scan_cap=100)
        if n is None:
            continue
        counts = Counter(w)
        for a in set(w):
            if counts[a] > n:
                span = pump_factor(w, n, m, a)
                check_pump_postconditions(w, n, m, a, span)
                done += 1
    assert done > 50
