"""The n,p-congruence on words: signatures, quotients, and refinement decisions.

A word's class is written as a signature: every letter is either rare (its
exact count, at most n) or frequent (its count modulo p only), plus the exact
subword formed by the rare letters.  Two words are congruent iff their
signatures coincide.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

from .errors import HypothesisViolated, RequiresMonoid, ResourceExceeded, UnknownLetter
from .semigroups import FiniteSemigroup, Mismatch, Morphism, make_semigroup

DEFAULT_SIGNATURE_CAP = 5_000_000


@dataclass(frozen=True)
class NpParams:
    """Alphabet, threshold n >= 1 and period p >= 1 of the congruence."""

    alphabet: tuple
    n: int
    p: int

    def __post_init__(self):
        if self.n < 1 or self.p < 1:
            raise ValueError("n and p must be >= 1")
        if len(self.alphabet) == 0:
            raise ValueError("alphabet must be nonempty")
        if len(set(self.alphabet)) != len(self.alphabet):
            raise ValueError("alphabet has duplicate letters")

    @cached_property
    def _pos(self) -> dict:
        return {a: i for i, a in enumerate(self.alphabet)}

    def positions(self, word: Sequence) -> list[int]:
        pos = self._pos
        try:
            return [pos[a] for a in word]
        except KeyError as exc:
            raise UnknownLetter(exc.args[0]) from None


@dataclass(frozen=True)
class NpSignature:
    """Canonical class descriptor.

    ``status[i]`` is the state of letter i of the alphabet: values 0..n are
    exact rare counts, and n+1+r means frequent with count congruent to r
    modulo p.  ``rare`` is the rare subword as a tuple of letter positions.
    """

    status: tuple[int, ...]
    rare: tuple[int, ...]

    def is_rare(self, i: int, params: NpParams) -> bool:
        return self.status[i] <= params.n

    def rare_count(self, i: int, params: NpParams) -> int:
        if self.status[i] > params.n:
            raise ValueError(f"letter position {i} is frequent")
        return self.status[i]

    def residue(self, i: int, params: NpParams) -> int:
        """Count modulo p, defined for rare and frequent letters alike."""
        s = self.status[i]
        return s % params.p if s <= params.n else s - params.n - 1

    def rare_word(self, params: NpParams):
        letters = [params.alphabet[i] for i in self.rare]
        if all(isinstance(a, str) for a in params.alphabet):
            return "".join(letters)
        return tuple(letters)

    def to_json(self, params: NpParams) -> dict:
        status = {}
        for i, a in enumerate(params.alphabet):
            if self.status[i] <= params.n:
                status[str(a)] = {"rare": self.status[i]}
            else:
                status[str(a)] = {"freq": self.status[i] - params.n - 1}
        rw = self.rare_word(params)
        return {"status": status,
                "rare_subword": rw if isinstance(rw, str) else [str(a) for a in rw]}


def empty_signature(params: NpParams) -> NpSignature:
    return NpSignature((0,) * len(params.alphabet), ())


def signature(word: Sequence, params: NpParams) -> NpSignature:
    """Signature of a word; letters outside the alphabet raise UnknownLetter."""
    positions = params.positions(word)
    counts = [0] * len(params.alphabet)
    for i in positions:
        counts[i] += 1
    n, p = params.n, params.p
    status = tuple(c if c <= n else n + 1 + c % p for c in counts)
    rare = tuple(i for i in positions if counts[i] <= n)
    return NpSignature(status, rare)


def extend(s: NpSignature, i: int, params: NpParams) -> NpSignature:
    """Signature of w.a given the signature of w and the position of a."""
    n, p = params.n, params.p
    st = s.status[i]
    status = list(s.status)
    if st < n:
        status[i] = st + 1
        return NpSignature(tuple(status), s.rare + (i,))
    if st == n:
        status[i] = n + 1 + (n + 1) % p
        return NpSignature(tuple(status), tuple(x for x in s.rare if x != i))
    status[i] = n + 1 + (st - n - 1 + 1) % p
    return NpSignature(tuple(status), s.rare)


def concat(s: NpSignature, t: NpSignature, params: NpParams) -> NpSignature:
    """Signature of uv from the signatures of u and v (same params)."""
    n, p = params.n, params.p
    status = []
    for a, b in zip(s.status, t.status):
        if a <= n and b <= n:
            tot = a + b
            status.append(tot if tot <= n else n + 1 + tot % p)
        else:
            ra = a % p if a <= n else a - n - 1
            rb = b % p if b <= n else b - n - 1
            status.append(n + 1 + (ra + rb) % p)
    status = tuple(status)
    rare = tuple(i for i in s.rare + t.rare if status[i] <= n)
    return NpSignature(status, rare)


def equivalent(u: Sequence, v: Sequence, params: NpParams) -> bool:
    return signature(u, params) == signature(v, params)


def representative(s: NpSignature, params: NpParams):
    """A canonical member of the class: frequent blocks in alphabet order,
    each with the least count > n matching its residue, then the rare subword."""
    n, p = params.n, params.p
    out = []
    for i, a in enumerate(params.alphabet):
        st = s.status[i]
        if st > n:
            r = st - n - 1
            count = n + 1 + (r - (n + 1)) % p
            out.extend([a] * count)
    out.extend(params.alphabet[i] for i in s.rare)
    if all(isinstance(a, str) for a in params.alphabet):
        return "".join(out)
    return tuple(out)


def enumerate_reachable_signatures(params: NpParams,
                                   cap: int = DEFAULT_SIGNATURE_CAP) -> list[NpSignature]:
    """All signatures of words over the alphabet, in BFS discovery order."""
    start = empty_signature(params)
    seen = {start}
    order = [start]
    queue = deque([start])
    letters = range(len(params.alphabet))
    while queue:
        s = queue.popleft()
        for i in letters:
            t = extend(s, i, params)
            if t not in seen:
                if len(seen) >= cap:
                    raise ResourceExceeded(cap, "signatures")
                seen.add(t)
                order.append(t)
                queue.append(t)
    return order


def signature_monoid(params: NpParams,
                     cap: int = DEFAULT_SIGNATURE_CAP) -> tuple[FiniteSemigroup, list[NpSignature]]:
    """Materialize the quotient monoid of the congruence (validated table)."""
    sigs = enumerate_reachable_signatures(params, cap)
    index = {s: i for i, s in enumerate(sigs)}
    table = [[index[concat(a, b, params)] for b in sigs] for a in sigs]
    return make_semigroup(table, identity=0), sigs


@dataclass(frozen=True)
class RefinementReport:
    """Outcome of deciding whether the congruence refines a morphism's kernel."""

    refines: bool
    counterexample: Optional[tuple]
    explored_states: int


def refines(params: NpParams, h: Morphism,
            cap: int = DEFAULT_SIGNATURE_CAP) -> RefinementReport:
    """Exact decision: does u ~ v (same signature) force h(u) = h(v)?

    Fixpoint over reachable (signature, element) pairs starting from the empty
    word; a signature seen with two distinct elements yields a counterexample
    pair reconstructed from BFS parents, hence shortest.
    """
    M = h.target
    if M.identity_element is None:
        raise RequiresMonoid("refinement target must be a monoid")
    images = [h.images[a] for a in params.alphabet]
    start = empty_signature(params)
    elem_of = {start: M.identity_element}
    parent: dict[NpSignature, tuple[Optional[NpSignature], int]] = {start: (None, -1)}
    queue = deque([(start, M.identity_element)])
    letters = range(len(params.alphabet))

    def word_to(sig: NpSignature) -> Sequence:
        out = []
        cur: Optional[NpSignature] = sig
        while cur is not None:
            prev, i = parent[cur]
            if i >= 0:
                out.append(params.alphabet[i])
            cur = prev
        out.reverse()
        if all(isinstance(a, str) for a in params.alphabet):
            return "".join(out)
        return tuple(out)

    while queue:
        sig, elem = queue.popleft()
        for i in letters:
            nsig = extend(sig, i, params)
            nelem = M.mul(elem, images[i])
            known = elem_of.get(nsig)
            if known is None:
                if len(elem_of) >= cap:
                    raise ResourceExceeded(cap, "signatures")
                elem_of[nsig] = nelem
                parent[nsig] = (sig, i)
                queue.append((nsig, nelem))
            elif known != nelem:
                u = word_to(nsig)
                seq = word_to(sig)
                a = params.alphabet[i]
                v = seq + a if isinstance(seq, str) else seq + (a,)
                return RefinementReport(False, (u, v), len(elem_of))
    return RefinementReport(True, None, len(elem_of))


def verify_moveend(w: Sequence, h: Morphism, a) -> Optional[Mismatch]:
    """Check h(w) = h(a^|w|_a . w') for w' = w with all a's deleted.

    Requires a ZG target and a frequent in w for the threshold |M|+1; holds
    whenever those hypotheses do, so any Mismatch is an implementation bug.
    """
    from .varieties import ZG, check_identity

    M = h.target
    if check_identity(M, ZG) is not None:
        raise HypothesisViolated("target monoid is not in ZG")
    n = M.order + 1
    count = sum(1 for c in w if c == a)
    if count <= n:
        raise HypothesisViolated(f"letter {a!r} occurs {count} <= n = {n} times")
    rest = [c for c in w if c != a]
    lhs = h(w)
    rhs = h([a] * count + rest)
    if lhs == rhs:
        return None
    return Mismatch(lhs, rhs, {"word": w, "letter": a})
