"""Exception hierarchy.

Axiom and property failures are *verdicts*, not exceptions.  The classes here
signal malformed input, violated preconditions, or a size limit.
"""

from __future__ import annotations


class PrepeaError(Exception):
    """Base class for all errors raised by this package."""


class SizeLimitExceeded(PrepeaError):
    def __init__(self, what: str, n: int, limit: int):
        super().__init__(f"{what}: size {n} exceeds limit {limit}")
        self.n = n
        self.limit = limit


class StructureError(PrepeaError, ValueError):
    """A table, map or carrier does not have the declared shape."""


class NotPartialOrder(PrepeaError):
    def __init__(self, reason: str, witness: tuple[int, ...], side: str | None = None):
        prefix = f"{side}: " if side else ""
        super().__init__(f"{prefix}{reason} at {witness}")
        self.reason = reason
        self.witness = witness
        self.side = side


class NotReflexive(NotPartialOrder):
    def __init__(self, witness, side=None):
        super().__init__("not reflexive", witness, side)


class NotAntisymmetric(NotPartialOrder):
    def __init__(self, witness, side=None):
        super().__init__("not antisymmetric", witness, side)


class NotTransitive(NotPartialOrder):
    def __init__(self, witness, side=None):
        super().__init__("not transitive", witness, side)


class TwoDefinitionsDisagree(PrepeaError):
    """``a (+) b^R`` and ``b^L (+) a`` disagree on definedness."""

    def __init__(self, a: int, b: int):
        super().__init__(f"a+b^R and b^L+a disagree on definedness at ({a}, {b})")
        self.witness = (a, b)


class OrderInvalid(PrepeaError):
    def __init__(self, cause: NotPartialOrder):
        super().__init__(f"induced relation is not a partial order: {cause}")
        self.cause = cause
        self.witness = cause.witness


class InvalidDocPoset(PrepeaError):
    def __init__(self, clause: str, witness: tuple[int, ...]):
        super().__init__(f"double orthocomplementation fails ({clause}) at {witness}")
        self.clause = clause
        self.witness = witness


class DefinednessClash(InvalidDocPoset):
    def __init__(self, x: int, y: int):
        super().__init__("x <= y^L vs y <= x^R", (x, y))


class PreconditionFailed(PrepeaError):
    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class AxiomPreconditionFailed(PreconditionFailed):
    pass


class FormulaUndefined(PrepeaError):
    def __init__(self, a: int, b: int, side: str):
        super().__init__(f"explicit {side} difference needs an undefined sum at ({a}, {b})")
        self.witness = (a, b)
        self.side = side


class NoBottom(PrepeaError):
    pass


class NoSupremum(PrepeaError):
    def __init__(self, a: int, b: int, side: str, members: tuple[int, ...]):
        super().__init__(f"{side}_({a},{b}) = {set(members)} has no greatest element")
        self.witness = (a, b)
        self.side = side
        self.members = members


class DerivationFailed(PrepeaError):
    def __init__(self, failures):
        first = failures[0]
        super().__init__(f"derivation failed at {first.pair}: {first.describe()}")
        self.failures = failures


class InvalidPartition(PrepeaError):
    pass


class NotWeakCongruence(PreconditionFailed):
    pass


class MultiValuedCell(PrepeaError):
    def __init__(self, op: str, a: int, b: int, blocks):
        super().__init__(f"[{a}] {op} [{b}] meets several blocks: {sorted(blocks)}")
        self.op = op
        self.witness = (a, b)


class ParseError(PrepeaError, ValueError):
    pass


class InternalInconsistency(PrepeaError, AssertionError):
    """Two independent routes disagree; always a bug."""
