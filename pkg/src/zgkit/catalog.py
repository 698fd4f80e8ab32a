"""Named small semigroups, monoids, and DFAs used throughout tests and demos."""

from __future__ import annotations

from itertools import permutations

from .semigroups import FiniteSemigroup, adjoin_identity, make_semigroup


def trivial_monoid() -> FiniteSemigroup:
    return make_semigroup([[0]], identity=0, names=["1"])


def cyclic_group(n: int) -> FiniteSemigroup:
    """Z_n under addition, identity 0."""
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return make_semigroup(table, identity=0, names=[str(i) for i in range(n)])


def u1() -> FiniteSemigroup:
    """The two-element monoid {1, 0} under multiplication."""
    return make_semigroup([[0, 1], [1, 1]], identity=0, names=["1", "0"])


def right_zero(k: int) -> FiniteSemigroup:
    """x*y = y; every element idempotent, no identity for k >= 2."""
    table = [[j for j in range(k)] for _ in range(k)]
    identity = 0 if k == 1 else None
    return make_semigroup(table, identity=identity,
                          names=[f"e{i}" for i in range(k)])


def left_zero(k: int) -> FiniteSemigroup:
    table = [[i for _ in range(k)] for i in range(k)]
    identity = 0 if k == 1 else None
    return make_semigroup(table, identity=identity,
                          names=[f"e{i}" for i in range(k)])


def nilpotent_n2() -> FiniteSemigroup:
    """{a, 0} with every product 0."""
    return make_semigroup([[1, 1], [1, 1]], names=["a", "0"])


def n2_1() -> FiniteSemigroup:
    """N2 with an identity adjoined, ordered as {1, a, 0}."""
    return make_semigroup(
        [[0, 1, 2],
         [1, 2, 2],
         [2, 2, 2]],
        identity=0, names=["1", "a", "0"])


def brandt_b2() -> FiniteSemigroup:
    """Five-element Brandt semigroup on the 2x2 matrix units, {a, b, ab, ba, 0}."""
    return make_semigroup(
        [[4, 2, 4, 0, 4],
         [3, 4, 1, 4, 4],
         [0, 4, 2, 4, 4],
         [4, 1, 4, 3, 4],
         [4, 4, 4, 4, 4]],
        names=["a", "b", "ab", "ba", "0"])


def b2_1() -> FiniteSemigroup:
    """B2 with identity adjoined, ordered as {1, a, b, ab, ba, 0}.

    This is the syntactic monoid of (ab)*.
    """
    shift = [x + 1 for x in range(5)]
    b2 = brandt_b2()
    table = [[0, 1, 2, 3, 4, 5]]
    for x in range(5):
        table.append([shift[x]] + [shift[b2.table[x][y]] for y in range(5)])
    return make_semigroup(table, identity=0, names=["1", "a", "b", "ab", "ba", "0"])


def symmetric_s3() -> FiniteSemigroup:
    """The symmetric group on 3 points; in ZE but not in ZG."""
    perms = sorted(permutations(range(3)))
    index = {p: i for i, p in enumerate(perms)}
    # composition: (p*q)(i) = q(p(i)), matching left-to-right word evaluation
    table = [[index[tuple(q[p[i]] for i in range(3))] for q in perms] for p in perms]
    return make_semigroup(table, identity=index[(0, 1, 2)],
                          names=["".join(map(str, p)) for p in perms])


def z2_times_z3() -> FiniteSemigroup:
    from .semigroups import direct_product
    return direct_product(cyclic_group(2), cyclic_group(3))


def dfa_even_a():
    """Words over {a} with an even number of a's."""
    from .automata import make_dfa
    return make_dfa(alphabet=["a"], delta=[[1], [0]], initial=0, accepting=[0])


def dfa_sigma_star(alphabet=("a", "b")):
    from .automata import make_dfa
    return make_dfa(alphabet=list(alphabet), delta=[[0] * len(alphabet)],
                    initial=0, accepting=[0])


def dfa_ab_star():
    """(ab)* over {a, b}: states (expect-a, expect-b, dead)."""
    from .automata import make_dfa
    return make_dfa(alphabet=["a", "b"],
                    delta=[[1, 2], [2, 0], [2, 2]],
                    initial=0, accepting=[0])


def dfa_a_star_c_a_star():
    """a*ca* over {a, c}: exactly one c."""
    from .automata import make_dfa
    return make_dfa(alphabet=["a", "c"],
                    delta=[[0, 1], [1, 2], [2, 2]],
                    initial=0, accepting=[1])


def dfa_a_star_b_a_star_3():
    """a*ba* over {a, b, c}: exactly one b and no c."""
    from .automata import make_dfa
    return make_dfa(alphabet=["a", "b", "c"],
                    delta=[[0, 1, 2], [1, 2, 2], [2, 2, 2]],
                    initial=0, accepting=[1])
