"""Exception types shared across the package."""

from __future__ import annotations


class ZgkitError(Exception):
    """Base class for all errors raised by zgkit."""


class NotAssociative(ZgkitError):
    """A multiplication table fails associativity; carries the first bad triple."""

    def __init__(self, x: int, y: int, z: int):
        self.triple = (x, y, z)
        super().__init__(f"(x*y)*z != x*(y*z) for (x, y, z) = ({x}, {y}, {z})")


class BadIdentity(ZgkitError):
    def __init__(self, e: int):
        self.element = e
        super().__init__(f"element {e} is not a two-sided identity")


class BadExponent(ZgkitError):
    pass


class SizeCapExceeded(ZgkitError):
    pass


class UnknownLetter(ZgkitError):
    def __init__(self, letter):
        self.letter = letter
        super().__init__(f"letter {letter!r} is not in the alphabet")


class EmptyWordIntoSemigroup(ZgkitError):
    pass


class NotIdempotent(ZgkitError):
    def __init__(self, e: int):
        self.element = e
        super().__init__(f"element {e} is not idempotent")


class RequiresMonoid(ZgkitError):
    pass


class ArityMismatch(ZgkitError):
    pass


class ResourceExceeded(ZgkitError):
    def __init__(self, cap: int, what: str = "states"):
        self.cap = cap
        super().__init__(f"exceeded cap of {cap} {what}")


class NotComposable(ZgkitError):
    def __init__(self, dst: int, src: int):
        self.dst = dst
        self.src = src
        super().__init__(f"arrow ending at {dst} cannot precede arrow starting at {src}")


class NotStronglyConnected(ZgkitError):
    pass


class EmptyGraph(ZgkitError):
    pass


class AlphabetMismatch(ZgkitError):
    pass


class NotZG(ZgkitError):
    """Precondition failure: the given monoid does not have central group elements."""


class NotInZG(ZgkitError):
    """Membership failure carrying the witness that refutes it."""

    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"not in ZG: {witness}")


class HypothesisViolated(ZgkitError):
    def __init__(self, hypothesis: str):
        self.hypothesis = hypothesis
        super().__init__(f"hypothesis not satisfied: {hypothesis}")


class NoSuchFactor(ZgkitError):
    pass


class TheoryViolation(ZgkitError):
    """A result that contradicts a proved statement; always an implementation bug."""
