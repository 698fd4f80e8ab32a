from __future__ import annotations

import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zgkit import catalog
from zgkit.congruence import (
    NpParams,
    concat,
    empty_signature,
    enumerate_reachable_signatures,
    equivalent,
    refines,
    representative,
    signature,
    signature_monoid,
    verify_moveend,
)
from zgkit.errors import HypothesisViolated, ResourceExceeded, UnknownLetter
from zgkit.semigroups import Morphism


def oracle_equivalent(u, v, params):
    """Direct reading of the three defining conditions, no signatures."""
    cu, cv = Counter(u), Counter(v)
    rare_u = "".join(a for a in u if cu[a] <= params.n)
    rare_v = "".join(a for a in v if cv[a] <= params.n)
    if rare_u != rare_v:
        return False
    for a in params.alphabet:
        if (cu[a] > params.n) != (cv[a] > params.n):
            return False
        if cu[a] % params.p != cv[a] % params.p:
            return False
    return True


words2 = st.text(alphabet="ab", max_size=12)
words3 = st.text(alphabet="abc", max_size=12)


def test_signature_examples():
    P = NpParams(("a", "b"), 1, 1)
    s = signature("", P)
    assert s == empty_signature(P)
    s = signature("aab", P)
    assert s.status == (2, 1)  # a frequent (residue 0 encoded as n+1+0), b rare(1)
    assert s.rare_word(P) == "b"
    P2 = NpParams(("a", "b"), 1, 2)
    s = signature("abab", P2)
    assert not s.is_rare(0, P2) and not s.is_rare(1, P2)
    assert s.residue(0, P2) == 0 and s.residue(1, P2) == 0
    assert s.rare_word(P2) == ""
    with pytest.raises(UnknownLetter):
        signature("ax", P)


def test_concat_identity_and_promotion():
    P = NpParams(("a",), 2, 1)
    assert concat(signature("", P), signature("aa", P), P) == signature("aa", P)
    assert concat(signature("aa", P), signature("a", P), P) == signature("aaa", P)


@given(words3, words3)
def test_concat_matches_signature_of_concatenation(u, v):
    P = NpParams(("a", "b", "c"), 2, 2)
    assert concat(signature(u, P), signature(v, P), P) == signature(u + v, P)


@given(words2, words2)
def test_equivalent_matches_three_condition_oracle(u, v):
    for n, p in ((1, 1), (1, 2), (2, 2), (3, 2)):
        P = NpParams(("a", "b"), n, p)
        assert equivalent(u, v, P) == oracle_equivalent(u, v, P)


def test_equivalent_examples():
    assert not equivalent("a", "aa", NpParams(("a",), 1, 1))
    assert equivalent("aa", "aaa", NpParams(("a",), 1, 1))
    assert equivalent("aab", "aba", NpParams(("a", "b"), 1, 2))


@given(words2, words2)
def test_refinement_monotonicity(u, v):
    # (n,p)-equivalence implies (m,q)-equivalence for m <= n, q | p
    P = NpParams(("a", "b"), 2, 2)
    if equivalent(u, v, P):
        for m, q in ((1, 1), (1, 2), (2, 1), (2, 2)):
            assert equivalent(u, v, NpParams(("a", "b"), m, q))


def test_refinement_monotonicity_exhaustive_short():
    P = NpParams(("a", "b"), 2, 2)
    words = [
        "".join(w)
        for length in range(7)
        for w in itertools.product("ab", repeat=length)
    ]
    coarser = [NpParams(("a", "b"), m, q) for m, q in ((1, 1), (1, 2), (2, 1), (2, 2))]
    sigs = {w: signature(w, P) for w in words}
    for u in words:
        for v in words:
            if sigs[u] == sigs[v]:
                assert all(equivalent(u, v, Q) for Q in coarser)


def test_representative_examples():
    P = NpParams(("a", "b"), 1, 2)
    s = signature("ba", P)
    assert representative(s, P) == "ba"
    s = signature("aa", P)
    assert representative(s, P) == "aa"  # least count > 1 congruent to 0 mod 2
    P2 = NpParams(("a", "b"), 2, 2)
    s = signature("aaab", P2)
    assert representative(s, P2) == "aaab"  # least count > 2 congruent to 1 mod 2 is 3


@given(words3)
def test_representative_is_a_section(w):
    P = NpParams(("a", "b", "c"), 2, 3)
    s = signature(w, P)
    assert signature(representative(s, P), P) == s


def test_enumerate_reachable_signatures_counts():
    assert len(enumerate_reachable_signatures(NpParams(("a",), 1, 1))) == 3
    assert len(enumerate_reachable_signatures(NpParams(("a",), 1, 2))) == 4
    assert len(enumerate_reachable_signatures(NpParams(("a", "b"), 1, 1))) == 10


def oracle_signature_count(alphabet, n, p, max_len):
    seen = set()
    for length in range(max_len + 1):
        for w in itertools.product(alphabet, repeat=length):
            seen.add(signature("".join(w), NpParams(alphabet, n, p)))
    return len(seen)


def test_enumeration_agrees_with_word_scan_oracle():
    # all classes are realized by words of length <= (n+p)*|alphabet| + slack
    P = NpParams(("a", "b"), 1, 2)
    enum = enumerate_reachable_signatures(P)
    assert len(enum) == oracle_signature_count(("a", "b"), 1, 2, 8)
    assert len(set(enum)) == len(enum)


def test_enumeration_cap():
    with pytest.raises(ResourceExceeded):
        enumerate_reachable_signatures(NpParams(("a", "b"), 2, 2), cap=5)


def test_signature_monoid_is_valid_monoid():
    # associativity and identity are re-validated by make_semigroup inside
    M, sigs = signature_monoid(NpParams(("a", "b"), 1, 1))
    assert M.order == 10
    assert M.identity == 0
    assert sigs[0] == empty_signature(NpParams(("a", "b"), 1, 1))


def test_refines_z2_undersized():
    z2 = catalog.cyclic_group(2)
    h = Morphism(("a",), {"a": 1}, z2)
    rep = refines(NpParams(("a",), 1, 1), h)
    assert not rep.refines
    u, v = rep.counterexample
    assert (u, v) == ("aa", "aaa")
    P = NpParams(("a",), 1, 1)
    assert equivalent(u, v, P) and h(u) != h(v)


def test_refines_one_letter_theorem_instance():
    z2 = catalog.cyclic_group(2)
    h = Morphism(("a",), {"a": 1}, z2)
    assert refines(NpParams(("a",), 3, 2), h).refines


def test_refines_n2_1_tight():
    M = catalog.n2_1()
    h = Morphism(("a",), {"a": 1}, M)
    assert refines(NpParams(("a",), 1, 1), h).refines


def theorem_instances():
    return [
        (catalog.cyclic_group(2), 2),
        (catalog.n2_1(), 1),
        (catalog.cyclic_group(3), 3),
        (catalog.u1(), 1),
    ]


def generating_pairs(M):
    """All two-letter surjections onto M (images generating M as a monoid)."""
    out = []
    for x, y in itertools.product(range(M.order), repeat=2):
        seen = {M.identity_element}
        frontier = [M.identity_element]
        while frontier:
            nxt = []
            for s in frontier:
                for g in (x, y):
                    t = M.mul(s, g)
                    if t not in seen:
                        seen.add(t)
                        nxt.append(t)
            frontier = nxt
        if len(seen) == M.order:
            out.append((x, y))
    return out


def test_theorem_refinement_for_all_two_letter_surjections():
    for M, p in theorem_instances():
        pairs = generating_pairs(M)
        assert pairs, "each fixture must admit a two-letter surjection"
        for x, y in pairs:
            h = Morphism(("a", "b"), {"a": x, "b": y}, M)
            rep = refines(NpParams(("a", "b"), M.order + 1, p), h)
            assert rep.refines, (M, x, y)


def test_refines_counterexamples_always_check_out():
    # deliberately undersized parameters against non-commutative-ish targets
    cases = [
        (catalog.cyclic_group(3), 1, 1),
        (catalog.cyclic_group(2), 1, 1),
    ]
    for M, n, p in cases:
        for x, y in generating_pairs(M):
            h = Morphism(("a", "b"), {"a": x, "b": y}, M)
            rep = refines(NpParams(("a", "b"), n, p), h)
            if rep.counterexample:
                u, v = rep.counterexample
                assert equivalent(u, v, NpParams(("a", "b"), n, p))
                assert h(u) != h(v)


def test_verify_moveend(z6=None):
    M = catalog.n2_1()
    h = Morphism(("a", "b"), {"a": 1, "b": 2}, M)
    assert verify_moveend("ababababab", h, "a") is None
    assert verify_moveend("babababababb", h, "b") is None
    with pytest.raises(HypothesisViolated):
        verify_moveend("ab", h, "a")  # not frequent enough
    s3 = catalog.symmetric_s3()
    g = Morphism(("a",), {"a": 1}, s3)
    with pytest.raises(HypothesisViolated):
        verify_moveend("aaaaaaaaaa", g, "a")  # target not in ZG


@given(st.text(alphabet="ab", min_size=6, max_size=20))
@settings(max_examples=60)
def test_verify_moveend_random(w):
    M = catalog.z2_times_z3()
    h = Morphism(("a", "b"), {"a": 1, "b": 5}, M)
    n = M.order + 1
    for a in "ab":
        if w.count(a) > n:
            assert verify_moveend(w, h, a) is None
