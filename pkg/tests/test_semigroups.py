from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zgkit import catalog
from zgkit.errors import (
    BadExponent,
    BadIdentity,
    EmptyWordIntoSemigroup,
    NotAssociative,
    NotIdempotent,
    SizeCapExceeded,
    UnknownLetter,
)
from zgkit.semigroups import (
    FiniteSemigroup,
    Morphism,
    adjoin_identity,
    direct_product,
    evaluate_word,
    local_monoid,
    make_semigroup,
)


def naive_associative(table):
    k = len(table)
    for x, y, z in itertools.product(range(k), repeat=3):
        if table[table[x][y]][z] != table[x][table[y][z]]:
            return (x, y, z)
    return None


def naive_global_exponent(S):
    # least e >= 1 such that x^e is idempotent for all x, via repeated products
    def pw(x, e):
        acc = x
        for _ in range(e - 1):
            acc = S.mul(acc, x)
        return acc

    e = 1
    while True:
        if all(S.mul(pw(x, e), pw(x, e)) == pw(x, e) for x in range(S.order)):
            return e
        e += 1


def test_make_semigroup_trivial(trivial):
    assert trivial.order == 1
    assert trivial.global_exponent == 1
    assert trivial.identity == 0


def test_make_semigroup_z3(z3):
    assert z3.identity == 0
    assert z3.global_exponent == 3
    assert z3.period == 3


def test_make_semigroup_not_associative():
    with pytest.raises(NotAssociative) as exc:
        make_semigroup([[0, 1], [0, 0]])
    assert exc.value.triple == naive_associative([[0, 1], [0, 0]]) == (1, 0, 1)


def test_make_semigroup_bad_identity():
    with pytest.raises(BadIdentity):
        make_semigroup([[1, 1], [1, 1]], identity=0)


def test_make_semigroup_rejects_out_of_range():
    with pytest.raises(ValueError):
        make_semigroup([[0, 2], [0, 0]])


def test_global_exponent_matches_naive_oracle(z2, z3, u1, rz2, n2_1, b2, b2_1, s3):
    for S in (z2, z3, u1, rz2, n2_1, b2, b2_1, s3):
        assert S.global_exponent == naive_global_exponent(S)


def test_b2_1_exponent_is_two(b2_1):
    assert b2_1.global_exponent == 2


def test_omega_power_is_idempotent_and_minimal(z3, b2_1, s3, u1):
    for S in (z3, b2_1, s3, u1):
        w = S.global_exponent
        for x in range(S.order):
            assert S.is_idempotent(S.power(x, w))
        if w > 1:
            assert any(not S.is_idempotent(S.power(x, w - 1))
                       for x in range(S.order))


def test_power_reduction_convention(z3):
    # x^(omega+k) reduces k modulo omega
    assert z3.omega_power(1, 0) == 0     # x^omega is the identity in a group
    assert z3.omega_power(1, 1) == 1     # x^(omega+1) = x
    assert z3.omega_power(1, -1) == z3.omega_power(1, 2)


def test_power_absolute_examples(b2_1):
    a = 1  # element a of {1,a,b,ab,ba,0}
    assert b2_1.power(a, 2) == 5
    with pytest.raises(BadExponent):
        b2_1.power(a, 0)


def test_element_period(z3, z6, u1):
    assert all(z3.element_period(x) in (1, 3) for x in range(3))
    assert z3.period == 3
    assert z6.period == 6
    assert u1.period == 1


def test_period_divides_exponent(z2, z3, z6, b2, b2_1, rz2, s3):
    for S in (z2, z3, z6, b2, b2_1, rz2, s3):
        assert S.global_exponent % S.period == 0


def test_idempotents(z3, rz2, b2_1):
    assert z3.idempotents == (0,)
    assert rz2.idempotents == (0, 1)
    assert b2_1.idempotents == (0, 3, 4, 5)


def test_local_monoid_of_identity_is_whole(b2_1):
    M, embed = local_monoid(b2_1, 0)
    assert M.order == b2_1.order
    assert embed == tuple(range(6))


def test_local_monoid_b2(b2):
    # at the idempotent ab (index 2): {ab, 0}
    M, embed = local_monoid(b2, 2)
    assert embed == (2, 4)
    assert M.order == 2
    assert M.identity == 0


def test_local_monoid_rz2_trivial(rz2):
    for e in rz2.idempotents:
        M, embed = local_monoid(rz2, e)
        assert M.order == 1 and embed == (e,)


def test_local_monoid_requires_idempotent(b2):
    with pytest.raises(NotIdempotent):
        local_monoid(b2, 0)  # element a is not idempotent


def test_adjoin_identity_noop_on_monoid(z3, trivial):
    assert adjoin_identity(z3) is z3
    assert adjoin_identity(trivial) is trivial


def test_adjoin_identity_n2(n2):
    M = adjoin_identity(n2)
    assert M.order == 3
    assert M.identity == 2
    assert M.mul(2, 0) == 0 and M.mul(0, 2) == 0
    # same structure as the hand-built n2_1 up to the element order
    assert sorted(M.table[M.identity]) == list(range(3))


def test_adjoin_identity_rz2(rz2):
    M = adjoin_identity(rz2)
    assert M.order == 3 and M.identity == 2


def test_adjoin_identity_detects_semantic_identity():
    S = make_semigroup([[0, 1], [1, 0]])  # Z2 without the identity declared
    M = adjoin_identity(S)
    assert M.order == 2 and M.identity == 0


def test_direct_product(z2, z3, rz2, trivial):
    z6 = direct_product(z2, z3)
    assert z6.order == 6
    assert z6.period == 6
    # validated small products stay associative
    make_semigroup(z6.table, identity=z6.identity)
    s = direct_product(z3, trivial)
    assert s.table == z3.table
    sq = direct_product(rz2, rz2)
    assert sq.order == 4
    assert all(sq.is_idempotent(x) for x in range(4))
    make_semigroup(sq.table)


def test_direct_product_projections_are_homomorphisms(z3, rz2):
    P = direct_product(z3, rz2)
    m = rz2.order
    for x, y in itertools.product(range(P.order), repeat=2):
        xy = P.mul(x, y)
        assert xy // m == z3.mul(x // m, y // m)
        assert xy % m == rz2.mul(x % m, y % m)


def test_direct_product_size_cap(z3):
    with pytest.raises(SizeCapExceeded):
        direct_product(z3, z3, size_cap=8)


def test_evaluate_word(z2, b2_1):
    h = Morphism(("a",), {"a": 1}, z2)
    assert evaluate_word(h, "aa") == 0
    assert evaluate_word(h, "") == 0
    g = Morphism(("a", "b"), {"a": 1, "b": 2}, b2_1)
    assert evaluate_word(g, "ab") == 3  # element ab
    with pytest.raises(UnknownLetter):
        evaluate_word(g, "ax")


def test_evaluate_word_empty_into_semigroup(rz2):
    h = Morphism(("a",), {"a": 0}, rz2)
    with pytest.raises(EmptyWordIntoSemigroup):
        evaluate_word(h, "")


@given(st.lists(st.integers(0, 5), max_size=8), st.lists(st.integers(0, 5), max_size=8))
def test_evaluate_word_is_homomorphism(u, v):
    S = catalog.b2_1()
    h = Morphism(tuple(range(6)), {i: i for i in range(6)}, S)
    assert h(u + v) == S.mul(h(u), h(v))


def test_json_roundtrip(b2_1):
    copy = FiniteSemigroup.from_json(b2_1.to_json())
    assert copy == b2_1


def test_group_elements(z3, b2_1, u1):
    assert set(z3.group_elements) == {0, 1, 2}
    # in b2_1: idempotents plus nothing else lies in a subgroup
    assert set(b2_1.group_elements) == {0, 3, 4, 5}
    assert set(u1.group_elements) == {0, 1}


def test_random_tables_match_naive_checker():
    rng = random.Random(7)
    seen_valid = 0
    for _ in range(300):
        k = rng.randrange(2, 4)
        table = [[rng.randrange(k) for _ in range(k)] for _ in range(k)]
        bad = naive_associative(table)
        if bad is None:
            make_semigroup(table)
            seen_valid += 1
        else:
            with pytest.raises(NotAssociative):
                make_semigroup(table)
    assert seen_valid > 0
