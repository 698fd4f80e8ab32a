"""Complete DFAs, syntactic monoids, and the shuffle decomposition of ZG languages."""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .congruence import NpParams, enumerate_reachable_signatures, representative
from .errors import AlphabetMismatch, NotInZG, SizeCapExceeded
from .semigroups import FiniteSemigroup, Morphism, make_semigroup
from .varieties import VarietyVerdict, is_in

DEFAULT_MONOID_CAP = 10_000
DEFAULT_DFA_CAP = 1_000_000

# varieties decided on the syntactic semigroup rather than the monoid
_SEMIGROUP_VARIETIES = {"d", "nilpotent", "lzg", "lzg_p", "lzgp"}


@dataclass(frozen=True)
class Dfa:
    """A complete deterministic automaton; delta[state][letter_index]."""

    alphabet: tuple[str, ...]
    delta: tuple[tuple[int, ...], ...]
    initial: int
    accepting: frozenset[int]

    @property
    def n_states(self) -> int:
        return len(self.delta)

    def letter_index(self, a: str) -> int:
        return self.alphabet.index(a)

    def run(self, word: Sequence[str]) -> int:
        pos = {a: i for i, a in enumerate(self.alphabet)}
        q = self.initial
        for a in word:
            q = self.delta[q][pos[a]]
        return q

    def accepts(self, word: Sequence[str]) -> bool:
        return self.run(word) in self.accepting

    def to_json(self) -> str:
        doc = {
            "states": self.n_states,
            "alphabet": list(self.alphabet),
            "delta": [list(row) for row in self.delta],
            "initial": self.initial,
            "accepting": sorted(self.accepting),
        }
        return json.dumps(doc, sort_keys=True)

    @staticmethod
    def from_json(text: str) -> "Dfa":
        doc = json.loads(text)
        return make_dfa(doc["alphabet"], doc["delta"], doc["initial"], doc["accepting"])


def make_dfa(alphabet: Sequence[str], delta: Sequence[Sequence[int]],
             initial: int, accepting: Iterable[int]) -> Dfa:
    alphabet = tuple(alphabet)
    if len(set(alphabet)) != len(alphabet) or not alphabet:
        raise ValueError("alphabet must be nonempty and duplicate-free")
    delta = tuple(tuple(int(v) for v in row) for row in delta)
    n = len(delta)
    if n == 0:
        raise ValueError("a DFA needs at least one state")
    for row in delta:
        if len(row) != len(alphabet):
            raise ValueError("delta must be total: one entry per letter")
        for v in row:
            if not 0 <= v < n:
                raise ValueError(f"transition target {v} out of range")
    if not 0 <= initial < n:
        raise ValueError("initial state out of range")
    accepting = frozenset(int(q) for q in accepting)
    if not accepting <= set(range(n)):
        raise ValueError("accepting states out of range")
    return Dfa(alphabet, delta, initial, accepting)


def _trim(d: Dfa) -> Dfa:
    """Restrict to states reachable from the initial state."""
    order = [d.initial]
    seen = {d.initial}
    for q in order:
        for v in d.delta[q]:
            if v not in seen:
                seen.add(v)
                order.append(v)
    if len(order) == d.n_states:
        return d
    renum = {q: i for i, q in enumerate(order)}
    delta = tuple(tuple(renum[d.delta[q][c]] for c in range(len(d.alphabet)))
                  for q in order)
    return Dfa(d.alphabet, delta, 0, frozenset(renum[q] for q in d.accepting if q in renum))


def minimize(d: Dfa) -> Dfa:
    """Hopcroft minimization with a canonical (BFS) state numbering."""
    d = _trim(d)
    n = d.n_states
    m = len(d.alphabet)
    inv = [[[] for _ in range(n)] for _ in range(m)]
    for q in range(n):
        for c in range(m):
            inv[c][d.delta[q][c]].append(q)

    acc = set(d.accepting)
    non = set(range(n)) - acc
    blocks: list[set] = [b for b in (acc, non) if b]
    block_of = {}
    for i, b in enumerate(blocks):
        for q in b:
            block_of[q] = i
    work = {(i, c) for i in range(len(blocks)) for c in range(m)}
    while work:
        bi, c = work.pop()
        splitter = set(blocks[bi])
        pre = set()
        for q in splitter:
            pre.update(inv[c][q])
        touched = {}
        for q in pre:
            touched.setdefault(block_of[q], set()).add(q)
        for ti, inter in touched.items():
            block = blocks[ti]
            if len(inter) == len(block):
                continue
            rest = block - inter
            small, large = (inter, rest) if len(inter) <= len(rest) else (rest, inter)
            blocks[ti] = large
            blocks.append(small)
            ni = len(blocks) - 1
            for q in small:
                block_of[q] = ni
            # queueing the smaller half for every letter is sound whether or
            # not (ti, cc) is still pending
            for cc in range(m):
                work.add((ni, cc))
    # canonical numbering: BFS over blocks from the initial block
    start = block_of[d.initial]
    order = [start]
    seen = {start}
    for bi in order:
        q = next(iter(blocks[bi]))
        for c in range(m):
            nb = block_of[d.delta[q][c]]
            if nb not in seen:
                seen.add(nb)
                order.append(nb)
    renum = {bi: i for i, bi in enumerate(order)}
    delta = []
    for bi in order:
        q = next(iter(blocks[bi]))
        delta.append(tuple(renum[block_of[d.delta[q][c]]] for c in range(m)))
    accepting = frozenset(renum[bi] for bi in order
                          if next(iter(blocks[bi])) in d.accepting)
    return Dfa(d.alphabet, tuple(delta), renum[start], accepting)


def distinguishing_word(d1: Dfa, d2: Dfa) -> Optional[str]:
    """Shortest word accepted by exactly one automaton, or None if equivalent."""
    if d1.alphabet != d2.alphabet:
        raise AlphabetMismatch(f"{d1.alphabet} vs {d2.alphabet}")
    start = (d1.initial, d2.initial)
    parent: dict[tuple, tuple] = {start: (None, "")}
    queue = deque([start])
    while queue:
        q1, q2 = queue.popleft()
        if (q1 in d1.accepting) != (q2 in d2.accepting):
            word = []
            cur = (q1, q2)
            while parent[cur][0] is not None:
                cur, a = parent[cur][0], parent[cur][1]
                word.append(a)
            return "".join(reversed(word))
        for c, a in enumerate(d1.alphabet):
            nxt = (d1.delta[q1][c], d2.delta[q2][c])
            if nxt not in parent:
                parent[nxt] = ((q1, q2), a)
                queue.append(nxt)
    return None


def dfa_equivalent(d1: Dfa, d2: Dfa) -> bool:
    return distinguishing_word(d1, d2) is None


def product_dfa(d1: Dfa, d2: Dfa, op: Callable[[bool, bool], bool]) -> Dfa:
    if d1.alphabet != d2.alphabet:
        raise AlphabetMismatch(f"{d1.alphabet} vs {d2.alphabet}")
    m = len(d1.alphabet)
    start = (d1.initial, d2.initial)
    index = {start: 0}
    order = [start]
    delta = []
    for q1, q2 in order:
        row = []
        for c in range(m):
            nxt = (d1.delta[q1][c], d2.delta[q2][c])
            if nxt not in index:
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        delta.append(tuple(row))
    accepting = frozenset(i for i, (q1, q2) in enumerate(order)
                          if op(q1 in d1.accepting, q2 in d2.accepting))
    return Dfa(d1.alphabet, tuple(delta), 0, accepting)


def union_dfa(d1: Dfa, d2: Dfa) -> Dfa:
    return product_dfa(d1, d2, lambda a, b: a or b)


def intersect_dfa(d1: Dfa, d2: Dfa) -> Dfa:
    return product_dfa(d1, d2, lambda a, b: a and b)


@dataclass(frozen=True)
class SyntacticData:
    monoid: FiniteSemigroup
    morphism: Morphism
    accepting_elements: frozenset[int]


def _transformation_closure(d: Dfa, seed_identity: bool,
                            cap: int) -> tuple[list[tuple[int, ...]], dict, dict]:
    """Close the letter transformations of a DFA under composition.

    Returns (elements in discovery order, index map, letter -> element index).
    """
    n = d.n_states
    letters = [tuple(d.delta[q][c] for q in range(n)) for c in range(len(d.alphabet))]
    elements: list[tuple[int, ...]] = []
    index: dict[tuple[int, ...], int] = {}
    if seed_identity:
        ident = tuple(range(n))
        elements.append(ident)
        index[ident] = 0
    for t in letters:
        if t not in index:
            index[t] = len(elements)
            elements.append(t)
    queue = deque(elements)
    while queue:
        t = queue.popleft()
        for g in letters:
            tg = tuple(g[t[q]] for q in range(n))
            if tg not in index:
                if len(elements) >= cap:
                    raise SizeCapExceeded(f"transition monoid exceeds cap {cap}")
                index[tg] = len(elements)
                elements.append(tg)
                queue.append(tg)
    letter_map = {a: index[letters[c]] for c, a in enumerate(d.alphabet)}
    return elements, index, letter_map


def _closure_semigroup(elements, index, identity=None) -> FiniteSemigroup:
    n_states = len(elements[0])
    table = [[index[tuple(v[u[q]] for q in range(n_states))] for v in elements]
             for u in elements]
    return make_semigroup(table, identity=identity)


def syntactic_monoid(d: Dfa, cap: int = DEFAULT_MONOID_CAP) -> SyntacticData:
    """Transition monoid of the minimal DFA, with the evaluation morphism.

    A word belongs to the language iff its image lies in accepting_elements.
    """
    dm = minimize(d)
    elements, index, letter_map = _transformation_closure(dm, True, cap)
    M = _closure_semigroup(elements, index, identity=0)
    h = Morphism(dm.alphabet, letter_map, M)
    accepting = frozenset(i for i, t in enumerate(elements)
                          if t[dm.initial] in dm.accepting)
    return SyntacticData(M, h, accepting)


def syntactic_semigroup(d: Dfa, cap: int = DEFAULT_MONOID_CAP) -> FiniteSemigroup:
    """Closure of the letter transformations without adjoining the identity."""
    dm = minimize(d)
    elements, index, _ = _transformation_closure(dm, False, cap)
    S = _closure_semigroup(elements, index)
    e = S.identity_element
    if e is not None:
        from dataclasses import replace

        S = replace(S, identity=e)
    return S


def classify_language(d: Dfa, varieties: Sequence[str],
                      p: Optional[int] = None) -> list[VarietyVerdict]:
    """Classify via the syntactic monoid (semigroup for semigroup varieties)."""
    monoid = None
    semigroup = None
    out = []
    for v in varieties:
        if v.lower() in _SEMIGROUP_VARIETIES:
            if semigroup is None:
                semigroup = syntactic_semigroup(d)
            out.append(is_in(semigroup, v, p=p, strict=False))
        else:
            if monoid is None:
                monoid = syntactic_monoid(d).monoid
            out.append(is_in(monoid, v, p=p))
    return out


@dataclass(frozen=True)
class ShuffleTerm:
    """One disjoint shuffle: a fixed rare word interleaved with frequent letters.

    The described language is the set of words whose restriction to the rare
    alphabet is exactly ``rare_word`` and in which every letter of
    ``frequent_alphabet`` occurs more than n times, with the prescribed count
    residue modulo p (None leaves the residue unconstrained).
    """

    rare_word: str
    frequent_alphabet: tuple[str, ...]
    residues: tuple[tuple[str, Optional[int]], ...]
    n: int
    p: int

    def __post_init__(self):
        if set(self.rare_word) & set(self.frequent_alphabet):
            raise ValueError("rare word and frequent alphabet must be disjoint")
        for a in self.rare_word:
            if self.rare_word.count(a) > self.n:
                raise ValueError("rare letters occur at most n times")

    def to_json(self) -> dict:
        return {
            "rare_word": self.rare_word,
            "frequent_alphabet": list(self.frequent_alphabet),
            "residues": {a: r for a, r in self.residues},
            "n": self.n,
            "p": self.p,
        }


def zg_decompose(d: Dfa, cap: int = 5_000_000) -> list[ShuffleTerm]:
    """Decompose a language with ZG syntactic monoid into shuffle terms.

    Uses the threshold n = |M|+1 and the period p of M, under which the
    congruence classes are entirely inside or outside the language; one
    representative word per reachable signature is tested on the DFA.
    """
    syn = syntactic_monoid(d)
    M = syn.monoid
    verdict = is_in(M, "zg")
    if not verdict.member:
        raise NotInZG(verdict.witness)
    n = M.order + 1
    p = M.period
    params = NpParams(tuple(d.alphabet), n, p)
    terms = []
    for sig in enumerate_reachable_signatures(params, cap):
        rep = representative(sig, params)
        if not d.accepts(rep):
            continue
        freq = tuple(a for i, a in enumerate(params.alphabet) if sig.status[i] > n)
        residues = tuple((a, sig.residue(params.alphabet.index(a), params))
                         for a in freq)
        terms.append(ShuffleTerm(str(sig.rare_word(params)), freq, residues, n, p))
    return _merge_residue_complete(terms)


def _merge_residue_complete(terms: list[ShuffleTerm]) -> list[ShuffleTerm]:
    """Cosmetic simplification: collapse families covering every residue of a letter."""
    changed = True
    while changed:
        changed = False
        for letter in sorted({a for t in terms for a in t.frequent_alphabet}):
            groups: dict[tuple, list[ShuffleTerm]] = {}
            for t in terms:
                res = dict(t.residues)
                if res.get(letter) is None:
                    continue
                key = (t.rare_word, t.frequent_alphabet,
                       tuple(sorted((a, r) for a, r in res.items() if a != letter)),
                       t.n, t.p)
                groups.setdefault(key, []).append(t)
            for key, group in groups.items():
                seen = {dict(t.residues)[letter] for t in group}
                if len(seen) == group[0].p and len(group) == group[0].p:
                    merged_res = tuple(
                        (a, None if a == letter else dict(group[0].residues)[a])
                        for a, _ in group[0].residues)
                    merged = ShuffleTerm(group[0].rare_word, group[0].frequent_alphabet,
                                         merged_res, group[0].n, group[0].p)
                    terms = [t for t in terms if t not in group] + [merged]
                    changed = True
            if changed:
                break
    return sorted(terms, key=lambda t: (t.rare_word, t.frequent_alphabet, t.residues))


def term_monomial_dfa(t: ShuffleTerm, alphabet: Sequence[str]) -> Dfa:
    """The disjoint-monomial factor B* a_1 B* ... a_k B* of a term."""
    alphabet = tuple(alphabet)
    k = len(t.rare_word)
    dead = k + 1
    freq = set(t.frequent_alphabet)
    delta = []
    for pos in range(k + 2):
        row = []
        for a in alphabet:
            if pos < k and a == t.rare_word[pos]:
                row.append(pos + 1)
            elif pos <= k and a in freq:
                row.append(pos)
            else:
                row.append(dead)
        delta.append(tuple(row))
    return Dfa(alphabet, tuple(delta), 0, frozenset([k]))


def term_counting_dfa(t: ShuffleTerm, alphabet: Sequence[str],
                      cap: int = DEFAULT_DFA_CAP) -> Dfa:
    """The commutative factor: every frequent letter has count > n, residue as set.

    Letters outside the frequent alphabet are unconstrained here.
    """
    alphabet = tuple(alphabet)
    freq = tuple(sorted(t.frequent_alphabet))
    res = dict(t.residues)
    n, p = t.n, t.p

    def bump(state, a):
        if a not in freq:
            return state
        i = freq.index(a)
        lst = list(state)
        cnt, r = lst[i]
        lst[i] = (min(cnt + 1, n + 1), (r + 1) % p)
        return tuple(lst)

    def ok(state):
        return all(cnt > n and (res[a] is None or r == res[a])
                   for a, (cnt, r) in zip(freq, state))

    start = tuple((0, 0) for _ in freq)
    index = {start: 0}
    order = [start]
    delta = []
    for state in order:
        row = []
        for a in alphabet:
            nxt = bump(state, a)
            if nxt not in index:
                if len(order) >= cap:
                    raise SizeCapExceeded(f"term automaton exceeds cap {cap}")
                index[nxt] = len(order)
                order.append(nxt)
            row.append(index[nxt])
        delta.append(tuple(row))
    accepting = frozenset(i for i, s in enumerate(order) if ok(s))
    return Dfa(alphabet, tuple(delta), 0, accepting)


def term_to_dfa(t: ShuffleTerm, alphabet: Sequence[str],
                cap: int = DEFAULT_DFA_CAP) -> Dfa:
    """DFA accepting exactly the term's language over the given alphabet."""
    d = intersect_dfa(term_monomial_dfa(t, alphabet), term_counting_dfa(t, alphabet, cap))
    return minimize(d)


def decomposition_roundtrip(d: Dfa, cap: int = 5_000_000) -> Optional[str]:
    """Union of the decomposed terms checked against the input language.

    Returns None on success or a distinguishing word (which would be a bug).
    """
    terms = zg_decompose(d, cap)
    if not terms:
        empty = Dfa(tuple(d.alphabet), ((0,) * len(d.alphabet),), 0, frozenset())
        return distinguishing_word(empty, minimize(d))
    union = term_to_dfa(terms[0], d.alphabet)
    for t in terms[1:]:
        union = minimize(union_dfa(union, term_to_dfa(t, d.alphabet)))
    return distinguishing_word(union, minimize(d))
