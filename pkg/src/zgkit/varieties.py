"""Equational membership tests for varieties of finite semigroups and monoids.

Every negative answer comes with a concrete witness assignment; witnesses are
the lexicographically first violating assignment so output is reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional

from .errors import ArityMismatch, NotZG, RequiresMonoid
from .semigroups import FiniteSemigroup, Witness, local_monoid

INTERLEAVE_ASSIGNMENT_CAP = 2_000_000


@dataclass(frozen=True)
class IdentityName:
    """A named (pseudo)identity; ``param`` carries p for ZGP and n for ZG_INTERLEAVE."""

    kind: str
    param: Optional[int] = None

    def __str__(self) -> str:
        return f"{self.kind}({self.param})" if self.param is not None else self.kind


COM = IdentityName("com")
ZG = IdentityName("zg")
ZE = IdentityName("ze")
APERIODIC = IdentityName("aperiodic")
D = IdentityName("d")
NILPOTENT = IdentityName("nilpotent")
LZG_EQ = IdentityName("lzg_eq")
OMEGA_DISTRIB = IdentityName("omega_distrib")


def zgp(p: int) -> IdentityName:
    if p < 1:
        raise ValueError("p must be >= 1")
    return IdentityName("zgp", p)


def zg_interleave(n: int) -> IdentityName:
    if n < 1:
        raise ValueError("n must be >= 1")
    return IdentityName("zg_interleave", n)


# Identities the source material states for monoids rather than semigroups.
_MONOID_KINDS = {"com", "zg", "zgp", "ze", "aperiodic", "omega_distrib", "zg_interleave"}


@dataclass(frozen=True)
class VarietyVerdict:
    variety: str
    member: bool
    witness: Optional[Witness]
    method: str

    def to_json(self) -> dict:
        return {
            "variety": self.variety,
            "member": self.member,
            "witness": self.witness.to_json() if self.witness else None,
            "method": self.method,
        }


def check_identity(S: FiniteSemigroup, ident: IdentityName,
                   strict: bool = True) -> Optional[Witness]:
    """Exhaustively check one identity; None means it holds.

    With ``strict`` (the default), identities stated for monoids are rejected
    on identity-free semigroups instead of silently checking the bare equation.
    """
    if strict and ident.kind in _MONOID_KINDS and S.identity_element is None:
        raise RequiresMonoid(f"{ident} is an identity of monoids")
    k = S.order
    rng = range(k)
    mul = S.mul
    if ident.kind == "com":
        for x, y in product(rng, rng):
            if mul(x, y) != mul(y, x):
                return Witness("com", {"x": x, "y": y})
        return None
    if ident.kind == "zg":
        for x in rng:
            g = S.omega_power(x, 1)
            for y in rng:
                if mul(g, y) != mul(y, g):
                    return Witness("zg", {"x": x, "y": y})
        return None
    if ident.kind == "zgp":
        w = check_identity(S, ZG, strict=strict)
        if w is not None:
            return Witness(f"zgp({ident.param})", dict(w.assignment))
        for x in rng:
            if S.omega_power(x, ident.param) != S.omega_power(x, 0):
                return Witness(f"zgp({ident.param})", {"x": x})
        return None
    if ident.kind == "ze":
        for x in rng:
            e = S.omega_power(x, 0)
            for y in rng:
                if mul(e, y) != mul(y, e):
                    return Witness("ze", {"x": x, "y": y})
        return None
    if ident.kind == "aperiodic":
        for x in rng:
            if S.omega_power(x, 1) != S.omega_power(x, 0):
                return Witness("aperiodic", {"x": x})
        return None
    if ident.kind == "d":
        for x in rng:
            e = S.omega_power(x, 0)
            for y in rng:
                if mul(y, e) != e:
                    return Witness("d", {"x": x, "y": y})
        return None
    if ident.kind == "nilpotent":
        for x in rng:
            e = S.omega_power(x, 0)
            for y in rng:
                if mul(e, y) != e or mul(y, e) != e:
                    return Witness("nilpotent", {"x": x, "y": y})
        return None
    if ident.kind == "lzg_eq":
        for z in rng:
            zw = S.omega_power(z, 0)
            for x, y in product(rng, rng):
                a = mul(mul(zw, x), zw)
                b = mul(mul(zw, y), zw)
                a1 = S.omega_power(a, 1)
                if mul(a1, b) != mul(b, a1):
                    return Witness("lzg_eq", {"x": x, "y": y, "z": z})
        return None
    if ident.kind == "omega_distrib":
        for x, y in product(rng, rng):
            if S.omega_power(mul(x, y), 0) != mul(S.omega_power(x, 0), S.omega_power(y, 0)):
                return Witness("omega_distrib", {"x": x, "y": y})
        return None
    if ident.kind == "zg_interleave":
        n = ident.param
        if k ** (n + 1) > INTERLEAVE_ASSIGNMENT_CAP:
            raise ArityMismatch(f"zg_interleave({n}) over order {k} is too large")
        for m in rng:
            for tup in product(rng, repeat=n):
                mm = _interleave_mismatch(S, m, tup)
                if mm is not None:
                    return Witness(f"zg_interleave({n})",
                                   {"m": m, **{f"m_{i+1}": v for i, v in enumerate(tup)}})
        return None
    raise ValueError(f"unknown identity {ident.kind}")


def _interleave_mismatch(S: FiniteSemigroup, m: int, tup) -> Optional[tuple[int, int]]:
    # lhs: m . m_1 . m . m_2 . m ... m . m_n . m   rhs: m^(n+1) . m_1 ... m_n
    lhs = m
    for v in tup:
        lhs = S.mul(S.mul(lhs, v), m)
    rhs = S.power(m, len(tup) + 1)
    for v in tup:
        rhs = S.mul(rhs, v)
    return None if lhs == rhs else (lhs, rhs)


def lzg_via_local_monoids(S: FiniteSemigroup, p: Optional[int] = None) -> VarietyVerdict:
    """Test every local monoid eSe against ZG (or ZG_p when p is given)."""
    ident = zgp(p) if p is not None else ZG
    name = f"lzg_{p}" if p is not None else "lzg"
    for e in S.idempotents:
        M, embed = local_monoid(S, e)
        w = check_identity(M, ident)
        if w is not None:
            assignment = {"e": e}
            assignment.update({k: embed[v] for k, v in w.assignment.items()})
            return VarietyVerdict(name, False,
                                  Witness(f"{w.identity_name} in local monoid", assignment),
                                  "local-monoids")
    return VarietyVerdict(name, True, None, "local-monoids")


def _equation_verdict(S, name, ident, strict=True) -> VarietyVerdict:
    w = check_identity(S, ident, strict=strict)
    return VarietyVerdict(name, w is None, w, "equation")


def is_in(S: FiniteSemigroup, variety: str, p: Optional[int] = None,
          strict: bool = True) -> VarietyVerdict:
    """Decide membership of S in a named variety.

    Monoid varieties (com, zg, zg_p, ze, mnil, aperiodic, group) require an
    identity element under ``strict``; d, nilpotent, lzg, lzg_p are semigroup
    varieties and accept anything.
    """
    v = variety.lower()
    if v == "com":
        return _equation_verdict(S, "com", COM, strict)
    if v == "zg":
        return _equation_verdict(S, "zg", ZG, strict)
    if v in ("zg_p", "zgp"):
        if p is None:
            raise ValueError("zg_p needs p")
        return _equation_verdict(S, f"zg_{p}", zgp(p), strict)
    if v == "ze":
        return _equation_verdict(S, "ze", ZE, strict)
    if v == "aperiodic":
        return _equation_verdict(S, "aperiodic", APERIODIC, strict)
    if v == "mnil":
        w = check_identity(S, ZG, strict=strict)
        if w is None:
            w = check_identity(S, APERIODIC, strict=strict)
        return VarietyVerdict("mnil", w is None, w, "derived")
    if v == "d":
        return _equation_verdict(S, "d", D, strict)
    if v == "nilpotent":
        return _equation_verdict(S, "nilpotent", NILPOTENT, strict)
    if v == "lzg":
        return lzg_via_local_monoids(S)
    if v in ("lzg_p", "lzgp"):
        if p is None:
            raise ValueError("lzg_p needs p")
        return lzg_via_local_monoids(S, p)
    if v == "group":
        e = S.identity_element
        if e is None:
            if strict:
                raise RequiresMonoid("a group is a monoid")
            return VarietyVerdict("group", False, Witness("group", {}), "derived")
        for x in range(S.order):
            if S.omega_power(x, 0) != e:
                return VarietyVerdict("group", False,
                                      Witness("x^omega = 1", {"x": x}), "derived")
        return VarietyVerdict("group", True, None, "derived")
    raise ValueError(f"unknown variety {variety!r}")


def verify_omega_distrib(S: FiniteSemigroup) -> Optional[Witness]:
    """(xy)^omega = x^omega y^omega, valid in ZG; a witness here is a bug."""
    if check_identity(S, ZG) is not None:
        raise NotZG("omega-distributivity is only claimed for ZG monoids")
    return check_identity(S, OMEGA_DISTRIB)


def verify_zg_interleave(M: FiniteSemigroup, m: int, tup) -> Optional[Witness]:
    """Check the interleaved product against m^(n+1) m_1...m_n for one instance."""
    from .errors import HypothesisViolated

    if check_identity(M, ZG) is not None:
        raise HypothesisViolated("M is not in ZG")
    n = len(tup)
    if n < M.order + 1:
        raise HypothesisViolated(f"need n >= |M|+1 = {M.order + 1}, got {n}")
    mm = _interleave_mismatch(M, m, tuple(tup))
    if mm is None:
        return None
    return Witness(f"zg_interleave({n})",
                   {"m": m, **{f"m_{i+1}": v for i, v in enumerate(tup)}})
