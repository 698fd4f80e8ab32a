"""Finite semigroups and monoids as multiplication tables.

Elements are dense integer indices 0..k-1; the table is row-major with the row
index giving the left factor.  Structures are immutable after construction and
power data (idempotent power, periods) is cached on first use.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from functools import cached_property
from typing import Iterable, Mapping, Optional, Sequence

import numpy as np

from .errors import (
    BadExponent,
    BadIdentity,
    EmptyWordIntoSemigroup,
    NotAssociative,
    NotIdempotent,
    SizeCapExceeded,
    UnknownLetter,
)

DEFAULT_SIZE_CAP = 10_000


@dataclass(frozen=True)
class FiniteSemigroup:
    """A finite semigroup given by its Cayley table.

    ``identity`` is the index of the two-sided identity when one is declared,
    ``names`` optional display strings.  Use :func:`make_semigroup` to build a
    validated instance from raw data.
    """

    table: tuple[tuple[int, ...], ...]
    identity: Optional[int] = None
    names: Optional[tuple[str, ...]] = None

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, x: int, y: int) -> int:
        return self.table[x][y]

    def product(self, elems: Iterable[int]) -> int:
        """Product of a nonempty sequence (or the identity for an empty one)."""
        it = iter(elems)
        try:
            acc = next(it)
        except StopIteration:
            if self.identity is None:
                raise EmptyWordIntoSemigroup("empty product in a semigroup without identity")
            return self.identity
        t = self.table
        for x in it:
            acc = t[acc][x]
        return acc

    def name_of(self, x: int) -> str:
        return self.names[x] if self.names else str(x)

    @cached_property
    def _orbits(self) -> tuple[tuple[tuple[int, ...], int, int], ...]:
        # per element: (orbit of powers x^1..x^{index+period-1}, index, period)
        out = []
        for x in range(self.order):
            orbit = [x]
            seen = {x: 1}
            p = x
            e = 1
            while True:
                p = self.table[p][x]
                e += 1
                if p in seen:
                    index = seen[p]
                    period = e - index
                    break
                seen[p] = e
                orbit.append(p)
            out.append((tuple(orbit), index, period))
        return tuple(out)

    def power(self, x: int, k: int) -> int:
        """x^k for k >= 1."""
        if k < 1:
            raise BadExponent(f"absolute exponent must be >= 1, got {k}")
        orbit, index, period = self._orbits[x]
        if k <= len(orbit):
            return orbit[k - 1]
        return orbit[index - 1 + (k - index) % period]

    def omega_power(self, x: int, k: int = 0) -> int:
        """x^(omega+k) with k reduced modulo omega, any integer k allowed."""
        w = self.global_exponent
        return self.power(x, w + k % w)

    def element_period(self, x: int) -> int:
        """Least p' >= 1 with x^(omega+p') = x^omega."""
        return self._orbits[x][2]

    def element_index(self, x: int) -> int:
        """Least i >= 1 such that x^i lies on the cycle of powers of x."""
        return self._orbits[x][1]

    @cached_property
    def global_exponent(self) -> int:
        """Least omega >= 1 such that x^omega is idempotent for every x."""
        lcm = 1
        max_index = 1
        for _, index, period in self._orbits:
            lcm = math.lcm(lcm, period)
            max_index = max(max_index, index)
        return lcm * ((max_index + lcm - 1) // lcm)

    @cached_property
    def period(self) -> int:
        """lcm of the element periods."""
        return math.lcm(*(o[2] for o in self._orbits))

    @cached_property
    def idempotents(self) -> tuple[int, ...]:
        return tuple(x for x in range(self.order) if self.table[x][x] == x)

    def is_idempotent(self, x: int) -> bool:
        return self.table[x][x] == x

    @cached_property
    def identity_element(self) -> Optional[int]:
        """The two-sided identity, declared or detected; None if absent."""
        if self.identity is not None:
            return self.identity
        k = self.order
        for e in range(k):
            if all(self.table[e][x] == x == self.table[x][e] for x in range(k)):
                return e
        return None

    @property
    def is_monoid(self) -> bool:
        return self.identity_element is not None

    @cached_property
    def group_elements(self) -> tuple[int, ...]:
        """Elements lying in a subgroup, i.e. of the form x^(omega+1)."""
        return tuple(x for x in range(self.order) if self.omega_power(x, 1) == x)

    def to_json(self) -> str:
        doc = {
            "order": self.order,
            "table": [list(row) for row in self.table],
            "identity": self.identity,
            "names": list(self.names) if self.names else None,
        }
        return json.dumps(doc, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "FiniteSemigroup":
        doc = json.loads(text)
        return make_semigroup(doc["table"], identity=doc.get("identity"),
                              names=doc.get("names"))

    def __repr__(self) -> str:
        tag = "monoid" if self.identity is not None else "semigroup"
        return f"<{tag} of order {self.order}>"


@dataclass(frozen=True)
class Morphism:
    """A morphism from the free monoid over ``alphabet`` into ``target``."""

    alphabet: tuple
    images: Mapping
    target: FiniteSemigroup

    def __post_init__(self):
        for a in self.alphabet:
            if a not in self.images:
                raise UnknownLetter(a)

    def __call__(self, word: Sequence) -> int:
        return evaluate_word(self, word)


@dataclass(frozen=True)
class Witness:
    """A falsifying assignment for a named identity."""

    identity_name: str
    assignment: Mapping

    def to_json(self) -> dict:
        return {"identity": self.identity_name, "assignment": dict(self.assignment)}

    def __str__(self) -> str:
        body = ", ".join(f"{k}={v}" for k, v in self.assignment.items())
        return f"{self.identity_name} fails at {body}"


@dataclass(frozen=True)
class Mismatch:
    """Two sides of a checked equation that evaluated differently."""

    lhs: int
    rhs: int
    context: Mapping

    def __str__(self) -> str:
        return f"lhs={self.lhs} != rhs={self.rhs} ({dict(self.context)})"


def _as_table(table: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    return tuple(tuple(int(v) for v in row) for row in table)


def _check_associative(table: tuple[tuple[int, ...], ...]) -> None:
    k = len(table)
    arr = np.asarray(table, dtype=np.int64)
    for x in range(k):
        left = arr[arr[x]]          # left[y][z] = (x*y)*z
        right = arr[x][arr]         # right[y][z] = x*(y*z)
        if not np.array_equal(left, right):
            y, z = map(int, np.argwhere(left != right)[0])
            raise NotAssociative(x, y, z)


def make_semigroup(table: Sequence[Sequence[int]],
                   identity: Optional[int] = None,
                   names: Optional[Sequence[str]] = None) -> FiniteSemigroup:
    """Validate a Cayley table and return the semigroup it defines."""
    t = _as_table(table)
    k = len(t)
    if k == 0:
        raise ValueError("a semigroup is nonempty")
    for row in t:
        if len(row) != k:
            raise ValueError("table must be square")
        for v in row:
            if not 0 <= v < k:
                raise ValueError(f"table entry {v} out of range [0, {k})")
    _check_associative(t)
    if identity is not None:
        if not all(t[identity][x] == x == t[x][identity] for x in range(k)):
            raise BadIdentity(identity)
    if names is not None and len(names) != k:
        raise ValueError("names must match the order")
    return FiniteSemigroup(t, identity, tuple(names) if names else None)


def _trusted(table, identity=None, names=None) -> FiniteSemigroup:
    # for constructions that are associative by construction
    return FiniteSemigroup(_as_table(table), identity,
                           tuple(names) if names else None)


def adjoin_identity(S: FiniteSemigroup) -> FiniteSemigroup:
    """S^1: adjoin a fresh identity unless S already has a two-sided one."""
    e = S.identity_element
    if e is not None:
        return S if S.identity == e else replace(S, identity=e)
    k = S.order
    table = [list(row) + [x] for x, row in enumerate(S.table)]
    table.append(list(range(k + 1)))
    names = list(S.names) + ["1"] if S.names else None
    return _trusted(table, identity=k, names=names)


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup,
                   size_cap: int = DEFAULT_SIZE_CAP) -> FiniteSemigroup:
    """Componentwise product on pairs, indexed as i*|T| + j."""
    k, m = S.order, T.order
    if k * m > size_cap:
        raise SizeCapExceeded(f"product order {k * m} exceeds cap {size_cap}")
    table = [
        [S.table[x1][x2] * m + T.table[y1][y2] for x2 in range(k) for y2 in range(m)]
        for x1 in range(k) for y1 in range(m)
    ]
    identity = None
    if S.identity_element is not None and T.identity_element is not None:
        identity = S.identity_element * m + T.identity_element
    names = None
    if S.names and T.names:
        names = [f"({S.names[i]},{T.names[j]})" for i in range(k) for j in range(m)]
    return _trusted(table, identity=identity, names=names)


def local_monoid(S: FiniteSemigroup, e: int) -> tuple[FiniteSemigroup, tuple[int, ...]]:
    """The monoid eSe = {x : e*x*e = x} with identity e, plus its embedding.

    Returns (M, embedding) where embedding[i] is the index in S of element i
    of M.
    """
    if not S.is_idempotent(e):
        raise NotIdempotent(e)
    members = [x for x in range(S.order)
               if S.mul(S.mul(e, x), e) == x]
    pos = {x: i for i, x in enumerate(members)}
    table = []
    for x in members:
        row = []
        for y in members:
            xy = S.mul(x, y)
            if xy not in pos:
                raise NotAssociative(x, y, xy)  # closure failure: impossible
            row.append(pos[xy])
        table.append(row)
    names = [S.name_of(x) for x in members] if S.names else None
    return _trusted(table, identity=pos[e], names=names), tuple(members)


def evaluate_word(h: Morphism, word: Sequence) -> int:
    """Left-to-right fold of letter images; the empty word needs a monoid target."""
    if len(word) == 0:
        e = h.target.identity_element
        if e is None:
            raise EmptyWordIntoSemigroup("empty word into a semigroup without identity")
        return e
    try:
        elems = [h.images[a] for a in word]
    except KeyError as exc:
        raise UnknownLetter(exc.args[0]) from None
    return h.target.product(elems)


# Module-level aliases for the method-based operations, convenient in scripts.

def global_exponent(S: FiniteSemigroup) -> int:
    return S.global_exponent


def semigroup_period(S: FiniteSemigroup) -> int:
    return S.period


def element_period(S: FiniteSemigroup, x: int) -> int:
    return S.element_period(x)


def idempotents(S: FiniteSemigroup) -> tuple[int, ...]:
    return S.idempotents


def power(S: FiniteSemigroup, x: int, k: int, omega_relative: bool = False) -> int:
    return S.omega_power(x, k) if omega_relative else S.power(x, k)
