"""The category of idempotents of a finite semigroup, and path identities.

Objects are the idempotents of S; there is an arrow (e1, x, e2) whenever
e1*x*e2 = x.  Paths are nonempty composable arrow sequences; coterminal paths
share start and end objects.  The verifiers in this module evaluate both sides
of the loop-insertion, prefix-substitution and loop-recombination identities
that hold when every local monoid of S has central group elements.
"""

from __future__ import annotations

from collections import Counter, deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence, Union

from .errors import HypothesisViolated, NotComposable
from .graphs import is_union_of_sccs, strongly_connected_components
from .semigroups import FiniteSemigroup, Mismatch
from .thresholds import is_distant


@dataclass(frozen=True)
class CatArrow:
    src: int
    label: int
    dst: int


@dataclass(frozen=True)
class CatPath:
    """A path as a tuple of arrow indices into the owning category."""

    arrows: tuple[int, ...]

    def __post_init__(self):
        if not self.arrows:
            raise ValueError("paths are nonempty")

    def __len__(self) -> int:
        return len(self.arrows)

    def __add__(self, other: "CatPath") -> "CatPath":
        return CatPath(self.arrows + other.arrows)


PathLike = Union[CatPath, Sequence[int]]


def _ids(path: Optional[PathLike]) -> tuple[int, ...]:
    if path is None:
        return ()
    if isinstance(path, CatPath):
        return path.arrows
    return tuple(path)


@dataclass(frozen=True)
class IdemCategory:
    base: FiniteSemigroup
    objects: tuple[int, ...]
    arrows: tuple[CatArrow, ...]

    @property
    def arrow_index(self) -> dict:
        if "_arrow_index" not in self.__dict__:
            idx = {(a.src, a.label, a.dst): i for i, a in enumerate(self.arrows)}
            self.__dict__["_arrow_index"] = idx
        return self.__dict__["_arrow_index"]

    @property
    def out_arrows(self) -> dict:
        if "_out_arrows" not in self.__dict__:
            out = {o: [] for o in self.objects}
            for i, a in enumerate(self.arrows):
                out[a.src].append(i)
            self.__dict__["_out_arrows"] = {o: tuple(v) for o, v in out.items()}
        return self.__dict__["_out_arrows"]

    def hom(self, e1: int, e2: int) -> tuple[int, ...]:
        return tuple(i for i, a in enumerate(self.arrows)
                     if a.src == e1 and a.dst == e2)

    def identity_arrow(self, o: int) -> int:
        return self.arrow_index[(o, o, o)]

    def path(self, arrows: Sequence[int]) -> CatPath:
        p = CatPath(tuple(arrows))
        if not self.is_valid_path(p):
            raise NotComposable(-1, -1)
        return p

    def is_valid_path(self, path: PathLike) -> bool:
        ids = _ids(path)
        if not ids:
            return False
        arr = self.arrows
        if any(i < 0 or i >= len(arr) for i in ids):
            return False
        return all(arr[a].dst == arr[b].src for a, b in zip(ids, ids[1:]))

    def render_path(self, path: PathLike) -> str:
        ids = _ids(path)
        S = self.base
        out = [S.name_of(self.arrows[ids[0]].src)]
        for i in ids:
            a = self.arrows[i]
            out.append(f"-{S.name_of(a.label)}->")
            out.append(S.name_of(a.dst))
        return " ".join(out)


def build_category(S: FiniteSemigroup) -> IdemCategory:
    """Arrows via the membership test e1*x*e2 = x, cross-checked against e1*S*e2."""
    objects = S.idempotents
    arrows = []
    for e1 in objects:
        for e2 in objects:
            algebraic = {x for x in range(S.order)
                         if S.mul(S.mul(e1, x), e2) == x}
            generated = {S.mul(S.mul(e1, s), e2) for s in range(S.order)}
            if algebraic != generated:  # pragma: no cover - proved equal
                raise AssertionError("arrow characterizations disagree")
            arrows.extend(CatArrow(e1, x, e2) for x in sorted(algebraic))
    return IdemCategory(S, objects, tuple(arrows))


def compose(C: IdemCategory, a: CatArrow, b: CatArrow) -> CatArrow:
    if a.dst != b.src:
        raise NotComposable(a.dst, b.src)
    return CatArrow(a.src, C.base.mul(a.label, b.label), b.dst)


def evaluate_path(C: IdemCategory, path: PathLike) -> CatArrow:
    """Fold the labels of a valid nonempty path into one arrow."""
    ids = _ids(path)
    if not ids:
        raise ValueError("cannot evaluate an empty path")
    acc = C.arrows[ids[0]]
    for i in ids[1:]:
        acc = compose(C, acc, C.arrows[i])
    return acc


def path_start(C: IdemCategory, path: PathLike) -> int:
    return C.arrows[_ids(path)[0]].src


def path_end(C: IdemCategory, path: PathLike) -> int:
    return C.arrows[_ids(path)[-1]].dst


def coterminal(C: IdemCategory, p1: PathLike, p2: PathLike) -> bool:
    return (path_start(C, p1) == path_start(C, p2)
            and path_end(C, p1) == path_end(C, p2))


def loop_power(C: IdemCategory, loop_value: CatArrow, k: int) -> CatArrow:
    """k-th power of a loop's value in its local monoid; k = 0 gives the object."""
    if loop_value.src != loop_value.dst:
        raise NotComposable(loop_value.dst, loop_value.src)
    o = loop_value.src
    if k == 0:
        return CatArrow(o, o, o)
    return CatArrow(o, C.base.power(loop_value.label, k), o)


def omega_loop_power(C: IdemCategory, loop_value: CatArrow, k: int = 0) -> CatArrow:
    """Value of the loop to the power omega+k, omega the base global exponent."""
    w = C.base.global_exponent
    return loop_power(C, loop_value, w + k % w)


@lru_cache(maxsize=None)
def _base_in_lzg(S: FiniteSemigroup) -> bool:
    from .varieties import lzg_via_local_monoids

    return lzg_via_local_monoids(S).member


def frequent_arrow_ids(path: PathLike, n: int) -> set[int]:
    counts = Counter(_ids(path))
    return {a for a, c in counts.items() if c > n}


def frequent_graph_is_union_of_sccs(C: IdemCategory, path: PathLike,
                                    n: int) -> tuple[bool, list[set]]:
    """Do the frequent arrows of the path form a union of SCCs on the objects?"""
    edges = [(C.arrows[i].src, C.arrows[i].dst)
             for i in sorted(frequent_arrow_ids(path, n))]
    return is_union_of_sccs(C.objects, edges)


def _certify_threshold(C: IdemCategory, pi: tuple[int, ...],
                       must_be_frequent: Sequence[int],
                       n_prime: Optional[int]) -> int:
    """Find or validate a |S|-distant threshold keeping the given arrows frequent."""
    m = C.base.order
    counts = Counter(pi)
    need = set(must_be_frequent)
    if n_prime is not None:
        if not is_distant(pi, n_prime, m):
            raise HypothesisViolated(f"{n_prime} is not a {m}-distant threshold")
        bad = [a for a in need if counts[a] <= n_prime]
        if bad:
            raise HypothesisViolated(f"arrows {sorted(bad)} are not frequent")
        return n_prime
    limit = min((counts[a] for a in need), default=0)
    for cand in range(1, limit):
        if is_distant(pi, cand, m):
            return cand
    raise HypothesisViolated(
        "no |S|-distant threshold keeps the required arrows frequent")


def verify_loop_insertion(C: IdemCategory, r: Optional[PathLike],
                          t: Optional[PathLike], loop: PathLike,
                          n_prime: Optional[int] = None) -> Optional[Mismatch]:
    """Check r t = r loop^omega t in the category, under the stated hypotheses.

    The loop must consist of arrows frequent in the path r t for a certified
    |S|-distant threshold (supplied or searched for).  Holds whenever the base
    is locally ZG, so a Mismatch signals a bug.
    """
    rid, tid = _ids(r), _ids(t)
    pi = rid + tid
    if not pi:
        raise HypothesisViolated("r and t are both empty")
    if not C.is_valid_path(pi):
        raise HypothesisViolated("r t is not a valid path")
    lid = _ids(loop)
    if not C.is_valid_path(lid):
        raise HypothesisViolated("loop is not a valid path")
    junction = path_end(C, rid) if rid else path_start(C, tid)
    if path_start(C, lid) != junction or path_end(C, lid) != junction:
        raise HypothesisViolated("loop is not a loop on the junction object")
    if not _base_in_lzg(C.base):
        raise HypothesisViolated("base semigroup is not locally ZG")
    n_used = _certify_threshold(C, pi, lid, n_prime)
    del n_used
    lhs = evaluate_path(C, pi)
    ins = omega_loop_power(C, evaluate_path(C, lid))
    mid = ins if not rid else compose(C, evaluate_path(C, rid), ins)
    rhs = mid if not tid else compose(C, mid, evaluate_path(C, tid))
    if lhs == rhs:
        return None
    return Mismatch(lhs.label, rhs.label,
                    {"r": rid, "t": tid, "loop": lid})


def verify_loop_commutation(C: IdemCategory, x: PathLike, y: PathLike,
                            k: int = 1) -> Optional[Mismatch]:
    """x^(omega+k) y = y x^(omega+k) for coterminal loops in a locally ZG base."""
    xid, yid = _ids(x), _ids(y)
    for p in (xid, yid):
        if not C.is_valid_path(p) or path_start(C, p) != path_end(C, p):
            raise HypothesisViolated("arguments must be loops")
    if path_start(C, xid) != path_start(C, yid):
        raise HypothesisViolated("loops must be coterminal")
    if not _base_in_lzg(C.base):
        raise HypothesisViolated("base semigroup is not locally ZG")
    xv = omega_loop_power(C, evaluate_path(C, xid), k)
    yv = evaluate_path(C, yid)
    lhs = compose(C, xv, yv)
    rhs = compose(C, yv, xv)
    if lhs == rhs:
        return None
    return Mismatch(lhs.label, rhs.label, {"x": xid, "y": yid, "k": k})


@dataclass(frozen=True)
class LocalIdentityReport:
    """Results of the two coterminal-loop identities; None fields passed."""

    recombination: Optional[Mismatch]
    prefix_exchange: Optional[Mismatch]

    @property
    def ok(self) -> bool:
        return self.recombination is None and self.prefix_exchange is None


def verify_local_identities(C: IdemCategory, x: PathLike, x2: PathLike,
                            y: PathLike, y2: PathLike,
                            t: PathLike) -> LocalIdentityReport:
    """Evaluate both coterminal-loop identities on concrete paths.

    With X = value(x) etc., checks

      (XY)^w (X2Y2)^w  =  (XY2)^w (X2Y)^w (XY)^w (X2Y2)^w
      X T (XY)^w (X2Y2)^w  =  X2 T (XY)^w X Y2 (X2Y2)^(w-1)

    for x, x2 coterminal, y, y2 coterminal, x y and x2 y2 valid loops, and t
    coterminal with y.  Both hold in locally ZG bases.
    """
    xid, x2id, yid, y2id, tid = map(_ids, (x, x2, y, y2, t))
    for p in (xid, x2id, yid, y2id, tid):
        if not C.is_valid_path(p):
            raise HypothesisViolated("all five arguments must be valid paths")
    if not coterminal(C, xid, x2id) or not coterminal(C, yid, y2id):
        raise HypothesisViolated("x, x' and y, y' must be coterminal pairs")
    if path_end(C, xid) != path_start(C, yid) or path_end(C, yid) != path_start(C, xid):
        raise HypothesisViolated("x y must be a valid loop")
    if not coterminal(C, tid, yid):
        raise HypothesisViolated("t must be coterminal with y")
    if not _base_in_lzg(C.base):
        raise HypothesisViolated("base semigroup is not locally ZG")

    X = evaluate_path(C, xid)
    X2 = evaluate_path(C, x2id)
    Y = evaluate_path(C, yid)
    Y2 = evaluate_path(C, y2id)
    T = evaluate_path(C, tid)
    w = C.base.global_exponent

    def pw(a: CatArrow, k: int) -> CatArrow:
        return loop_power(C, a, k)

    def mul(*arrows: CatArrow) -> CatArrow:
        acc = arrows[0]
        for a in arrows[1:]:
            acc = compose(C, acc, a)
        return acc

    xy_w = pw(mul(X, Y), w)
    x2y2_w = pw(mul(X2, Y2), w)
    lhs1 = mul(xy_w, x2y2_w)
    rhs1 = mul(pw(mul(X, Y2), w), pw(mul(X2, Y), w), xy_w, x2y2_w)
    rec = None if lhs1 == rhs1 else Mismatch(lhs1.label, rhs1.label, {"claim": "recombination"})

    lhs2 = mul(X, T, xy_w, x2y2_w)
    rhs2 = mul(X2, T, xy_w, X, Y2, pw(mul(X2, Y2), w - 1))
    pre = None if lhs2 == rhs2 else Mismatch(lhs2.label, rhs2.label, {"claim": "prefix-exchange"})
    return LocalIdentityReport(rec, pre)


def search_prefix_substitution(C: IdemCategory, x: PathLike, r: PathLike,
                               y1: Optional[PathLike], y2: Optional[PathLike],
                               x_new: PathLike, loop_len_cap: int = 6,
                               n_prime: Optional[int] = None) -> Optional[CatPath]:
    """Search a loop y'' with x r y1 y2 = x_new r y1 y'' y2 in the category.

    Hypotheses (checked): the base is locally ZG; x_new is coterminal with x;
    all arrows of x and x_new are frequent in the whole path for a certified
    |S|-distant threshold; and the object between y1 and y2 lies in the same
    frequent-arrow SCC as the start of r.  The loop is guaranteed to exist but
    with no length bound; the search is capped, so None is inconclusive.
    """
    xid, rid = _ids(x), _ids(r)
    y1id, y2id = _ids(y1), _ids(y2)
    if not xid or not rid:
        raise HypothesisViolated("x and r must be nonempty paths")
    pi = xid + rid + y1id + y2id
    if not C.is_valid_path(pi):
        raise HypothesisViolated("x r y1 y2 is not a valid path")
    xnid = _ids(x_new)
    if not C.is_valid_path(xnid) or not coterminal(C, xid, xnid):
        raise HypothesisViolated("x' must be a path coterminal with x")
    if not _base_in_lzg(C.base):
        raise HypothesisViolated("base semigroup is not locally ZG")
    n_used = _certify_threshold(C, pi, list(xid) + list(xnid), n_prime)

    junction = path_end(C, xid + rid + y1id)
    freq = frequent_arrow_ids(pi, n_used)
    edges = [(C.arrows[i].src, C.arrows[i].dst) for i in sorted(freq)]
    comps = strongly_connected_components(C.objects, edges)
    comp_of = {}
    for idx, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = idx
    if comp_of.get(junction) != comp_of.get(path_start(C, rid)):
        raise HypothesisViolated(
            "the split object is not in the frequent SCC of the start of r")

    target = evaluate_path(C, pi)
    prefix = evaluate_path(C, xnid + rid + y1id) if y1id else evaluate_path(C, xnid + rid)
    suffix = evaluate_path(C, y2id) if y2id else None
    allowed = sorted(freq | {C.identity_arrow(junction)})
    by_src: dict[int, list[int]] = {}
    for i in allowed:
        by_src.setdefault(C.arrows[i].src, []).append(i)

    # breadth-first over loops at the junction, shortest and lexicographically
    # least candidate first
    queue = deque([((), junction, None)])
    while queue:
        ids, obj, value = queue.popleft()
        if len(ids) >= loop_len_cap:
            continue
        for i in by_src.get(obj, ()):
            arr = C.arrows[i]
            nval = arr if value is None else compose(C, value, arr)
            nids = ids + (i,)
            if arr.dst == junction:
                candidate = compose(C, prefix, nval)
                if suffix is not None:
                    candidate = compose(C, candidate, suffix)
                if candidate == target:
                    return CatPath(nids)
            queue.append((nids, arr.dst, nval))
    return None


def category_to_dot(C: IdemCategory, arrow_ids: Optional[Sequence[int]] = None,
                    name: str = "idempotents") -> str:
    """DOT rendering with stable node and edge order; optionally a subgraph."""
    S = C.base
    ids = range(len(C.arrows)) if arrow_ids is None else sorted(arrow_ids)
    lines = [f"digraph {name} {{"]
    for o in C.objects:
        lines.append(f'  e{o} [label="{S.name_of(o)}"];')
    for i in ids:
        a = C.arrows[i]
        lines.append(f'  e{a.src} -> e{a.dst} [label="{S.name_of(a.label)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
