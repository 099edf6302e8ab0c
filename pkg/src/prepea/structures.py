"""Immutable finite partial algebras and posets.

Elements are the integers ``0..n-1``.  A partial binary operation is an
``n x n`` table whose cells hold an element or ``None`` (undefined).  Labels
are cosmetic and never take part in comparisons of semantics; they are,
however, part of dataclass equality, so compare models through their tables
(or :func:`prepea.canon.canonical_form`) when labels may differ.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import product

from .errors import (
    InvalidDocPoset,
    NotAntisymmetric,
    NotReflexive,
    NotTransitive,
    StructureError,
)

UNDEFINED = None

Cell = int | None
Rows = tuple[tuple[Cell, ...], ...]


def default_labels(n: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(n))


@dataclass(frozen=True)
class Carrier:
    size: int
    zero: int = 0
    unit: int | None = None
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        n = self.size
        if n < 1:
            raise StructureError("carrier must be non-empty")
        if not 0 <= self.zero < n:
            raise StructureError(f"zero {self.zero} outside carrier of size {n}")
        if self.unit is not None:
            if not 0 <= self.unit < n:
                raise StructureError(f"unit {self.unit} outside carrier of size {n}")
            if self.unit == self.zero and n != 1:
                raise StructureError("unit equals zero in a carrier with more than one element")
        if self.labels is not None:
            labels = tuple(str(s) for s in self.labels)
            if len(labels) != n or len(set(labels)) != n:
                raise StructureError("labels must be n distinct names")
            object.__setattr__(self, "labels", labels)

    @property
    def names(self) -> tuple[str, ...]:
        return self.labels if self.labels is not None else default_labels(self.size)

    def name(self, x: int | None) -> str:
        return "." if x is None else self.names[x]

    def relabel(self, perm: Sequence[int]) -> Carrier:
        labels = None
        if self.labels is not None:
            new = [""] * self.size
            for old, lab in enumerate(self.labels):
                new[perm[old]] = lab
            labels = tuple(new)
        unit = None if self.unit is None else perm[self.unit]
        return Carrier(self.size, perm[self.zero], unit, labels)


@dataclass(frozen=True)
class PartialBinTable:
    cells: Rows

    def __post_init__(self):
        rows = tuple(tuple(None if v is None else int(v) for v in row) for row in self.cells)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise StructureError("table must be square")
            for v in row:
                if v is not None and not 0 <= v < n:
                    raise StructureError(f"table value {v} outside [0, {n})")
        object.__setattr__(self, "cells", rows)

    @classmethod
    def empty(cls, n: int) -> PartialBinTable:
        return cls(tuple((None,) * n for _ in range(n)))

    @classmethod
    def from_function(cls, n: int, fn) -> PartialBinTable:
        return cls(tuple(tuple(fn(a, b) for b in range(n)) for a in range(n)))

    @property
    def size(self) -> int:
        return len(self.cells)

    def __call__(self, a: int | None, b: int | None) -> Cell:
        if a is None or b is None:
            return None
        return self.cells[a][b]

    def defined(self, a: int, b: int) -> bool:
        return self.cells[a][b] is not None

    def domain(self) -> list[tuple[int, int]]:
        n = self.size
        return [(a, b) for a, b in product(range(n), repeat=2) if self.cells[a][b] is not None]

    def transpose(self) -> PartialBinTable:
        n = self.size
        return PartialBinTable(tuple(tuple(self.cells[b][a] for b in range(n)) for a in range(n)))

    def relabel(self, perm: Sequence[int]) -> PartialBinTable:
        n = self.size
        new = [[None] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                v = self.cells[a][b]
                new[perm[a]][perm[b]] = None if v is None else perm[v]
        return PartialBinTable(tuple(map(tuple, new)))

    def with_cell(self, a: int, b: int, value: Cell) -> PartialBinTable:
        rows = [list(r) for r in self.cells]
        rows[a][b] = value
        return PartialBinTable(tuple(map(tuple, rows)))


@dataclass(frozen=True)
class UnaryMap:
    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(v) for v in self.image)
        n = len(image)
        for v in image:
            if not 0 <= v < n:
                raise StructureError(f"map value {v} outside [0, {n})")
        object.__setattr__(self, "image", image)

    @property
    def size(self) -> int:
        return len(self.image)

    def __call__(self, a: int) -> int:
        return self.image[a]

    def is_bijection(self) -> bool:
        return len(set(self.image)) == len(self.image)

    def inverse(self) -> UnaryMap:
        if not self.is_bijection():
            raise StructureError("map is not a bijection")
        inv = [0] * self.size
        for a, b in enumerate(self.image):
            inv[b] = a
        return UnaryMap(tuple(inv))

    def relabel(self, perm: Sequence[int]) -> UnaryMap:
        new = [0] * self.size
        for a, b in enumerate(self.image):
            new[perm[a]] = perm[b]
        return UnaryMap(tuple(new))


@dataclass(frozen=True)
class Poset:
    """A finite partial order; ``leq[a][b]`` is ``a <= b``.

    Construct through :func:`validate_poset` when the relation is untrusted;
    the constructor only checks the shape.
    """

    leq: tuple[tuple[bool, ...], ...]
    _down: tuple[frozenset, ...] = field(init=False, repr=False, compare=False)
    _up: tuple[frozenset, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rel = tuple(tuple(bool(v) for v in row) for row in self.leq)
        n = len(rel)
        if n < 1 or any(len(r) != n for r in rel):
            raise StructureError("relation must be a non-empty square matrix")
        object.__setattr__(self, "leq", rel)
        object.__setattr__(self, "_down", tuple(frozenset(x for x in range(n) if rel[x][a]) for a in range(n)))
        object.__setattr__(self, "_up", tuple(frozenset(x for x in range(n) if rel[a][x]) for a in range(n)))

    @property
    def size(self) -> int:
        return len(self.leq)

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def lt(self, a: int, b: int) -> bool:
        return a != b and self.leq[a][b]

    def comparable(self, a: int, b: int) -> bool:
        return self.leq[a][b] or self.leq[b][a]

    def down(self, a: int) -> frozenset:
        return self._down[a]

    def up(self, a: int) -> frozenset:
        return self._up[a]

    def bottom(self) -> int | None:
        n = self.size
        for a in range(n):
            if len(self._up[a]) == n:
                return a
        return None

    def top(self) -> int | None:
        n = self.size
        for a in range(n):
            if len(self._down[a]) == n:
                return a
        return None

    def maximal(self, subset: Iterable[int]) -> tuple[int, ...]:
        s = set(subset)
        return tuple(sorted(x for x in s if not any(self.lt(x, y) for y in s)))

    def minimal(self, subset: Iterable[int]) -> tuple[int, ...]:
        s = set(subset)
        return tuple(sorted(x for x in s if not any(self.lt(y, x) for y in s)))

    def greatest(self, subset: Iterable[int]) -> int | None:
        """Greatest element of ``subset`` (a member above all members)."""
        s = list(subset)
        for x in s:
            if all(self.leq[y][x] for y in s):
                return x
        return None

    def least(self, subset: Iterable[int]) -> int | None:
        s = list(subset)
        for x in s:
            if all(self.leq[x][y] for y in s):
                return x
        return None

    def lower_bounds(self, subset: Iterable[int]) -> tuple[int, ...]:
        s = list(subset)
        return tuple(x for x in range(self.size) if all(self.leq[x][y] for y in s))

    def upper_bounds(self, subset: Iterable[int]) -> tuple[int, ...]:
        s = list(subset)
        return tuple(x for x in range(self.size) if all(self.leq[y][x] for y in s))

    def glb(self, subset: Iterable[int]) -> int | None:
        return self.greatest(self.lower_bounds(subset))

    def lub(self, subset: Iterable[int]) -> int | None:
        return self.least(self.upper_bounds(subset))

    def covers(self) -> list[tuple[int, int]]:
        """Hasse diagram edges ``(a, b)`` with ``b`` covering ``a``."""
        n = self.size
        out = []
        for a, b in product(range(n), repeat=2):
            if self.lt(a, b) and not any(self.lt(a, c) and self.lt(c, b) for c in range(n)):
                out.append((a, b))
        return out

    def relabel(self, perm: Sequence[int]) -> Poset:
        n = self.size
        new = [[False] * n for _ in range(n)]
        for a in range(n):
            for b in range(n):
                new[perm[a]][perm[b]] = self.leq[a][b]
        return Poset(tuple(map(tuple, new)))

    @classmethod
    def from_covers(cls, n: int, covers: Iterable[tuple[int, int]]) -> Poset:
        """Reflexive-transitive closure of the given ``a < b`` pairs."""
        rel = [[a == b for b in range(n)] for a in range(n)]
        for a, b in covers:
            rel[a][b] = True
        for k in range(n):
            for i in range(n):
                if rel[i][k]:
                    for j in range(n):
                        if rel[k][j]:
                            rel[i][j] = True
        return validate_poset(rel)


def first_order_violation(leq: Sequence[Sequence[bool]]):
    """Row-major first failing tuple of reflexivity, antisymmetry, transitivity.

    Returns ``None`` for a partial order, else the exception to raise.
    """
    n = len(leq)
    for a in range(n):
        if not leq[a][a]:
            return NotReflexive((a,))
    for a in range(n):
        for b in range(n):
            if a != b and leq[a][b] and leq[b][a]:
                return NotAntisymmetric((a, b))
    for a in range(n):
        for b in range(n):
            if not leq[a][b]:
                continue
            for c in range(n):
                if leq[b][c] and not leq[a][c]:
                    return NotTransitive((a, b, c))
    return None


def validate_poset(leq: Sequence[Sequence[bool]], n: int | None = None) -> Poset:
    if n is not None and (len(leq) != n or any(len(r) != n for r in leq)):
        raise StructureError(f"relation is not {n} x {n}")
    if any(len(r) != len(leq) for r in leq):
        raise StructureError("relation must be square")
    err = first_order_violation(leq)
    if err is not None:
        raise err
    return Poset(tuple(tuple(bool(v) for v in r) for r in leq))


@dataclass(frozen=True)
class WppeaModel:
    """Candidate ``(A; (+), ^L, ^R, 0, 1)``; may or may not satisfy the axioms."""

    carrier: Carrier
    plus: PartialBinTable
    lsupp: UnaryMap
    rsupp: UnaryMap

    def __post_init__(self):
        n = self.carrier.size
        if self.carrier.unit is None:
            raise StructureError("a WPPEA candidate needs a unit element")
        for part in (self.plus, self.lsupp, self.rsupp):
            if part.size != n:
                raise StructureError("component size differs from carrier size")

    kind = "wppea"

    @property
    def n(self) -> int:
        return self.carrier.size

    @property
    def zero(self) -> int:
        return self.carrier.zero

    @property
    def unit(self) -> int:
        return self.carrier.unit

    def le(self, a: int, b: int) -> bool:
        """The defining clause ``a (+) b^R`` is defined."""
        return self.plus.cells[a][self.rsupp.image[b]] is not None

    def relabel(self, perm: Sequence[int]) -> WppeaModel:
        return WppeaModel(self.carrier.relabel(perm), self.plus.relabel(perm),
                          self.lsupp.relabel(perm), self.rsupp.relabel(perm))

    def same_structure(self, other: WppeaModel) -> bool:
        return (self.n, self.zero, self.unit, self.plus, self.lsupp, self.rsupp) == (
            other.n, other.zero, other.unit, other.plus, other.lsupp, other.rsupp)


@dataclass(frozen=True)
class GppeaModel:
    """Candidate ``(A; +, \\, /, 0)``; ``rminus`` is ``\\`` and ``lminus`` is ``/``."""

    carrier: Carrier
    plus: PartialBinTable
    rminus: PartialBinTable
    lminus: PartialBinTable

    def __post_init__(self):
        n = self.carrier.size
        for part in (self.plus, self.rminus, self.lminus):
            if part.size != n:
                raise StructureError("component size differs from carrier size")

    kind = "gppea"

    @property
    def n(self) -> int:
        return self.carrier.size

    @property
    def zero(self) -> int:
        return self.carrier.zero

    def le(self, a: int, b: int) -> bool:
        """``a <= b`` read off the right minus: ``b \\ a`` is defined."""
        return self.rminus.cells[b][a] is not None

    def order_relation(self) -> tuple[tuple[bool, ...], ...]:
        n = self.n
        return tuple(tuple(self.rminus.cells[b][a] is not None for b in range(n)) for a in range(n))

    def relabel(self, perm: Sequence[int]) -> GppeaModel:
        return GppeaModel(self.carrier.relabel(perm), self.plus.relabel(perm),
                          self.rminus.relabel(perm), self.lminus.relabel(perm))

    def same_structure(self, other: GppeaModel) -> bool:
        return (self.n, self.zero, self.plus, self.rminus, self.lminus) == (
            other.n, other.zero, other.plus, other.rminus, other.lminus)


@dataclass(frozen=True)
class DocPoset:
    """Bounded poset with two mutually inverse antitone complementations."""

    poset: Poset
    lcompl: UnaryMap
    rcompl: UnaryMap
    carrier: Carrier

    kind = "docposet"

    @property
    def n(self) -> int:
        return self.poset.size

    def relabel(self, perm: Sequence[int]) -> DocPoset:
        return DocPoset(self.poset.relabel(perm), self.lcompl.relabel(perm),
                        self.rcompl.relabel(perm), self.carrier.relabel(perm))


def docposet_violation(poset: Poset, lc: UnaryMap, rc: UnaryMap) -> InvalidDocPoset | None:
    n = poset.size
    bot, top = poset.bottom(), poset.top()
    if bot is None or top is None:
        return InvalidDocPoset("bounded", ())
    if lc.size != n or rc.size != n:
        return InvalidDocPoset("map size", ())
    le = poset.leq
    L, R = lc.image, rc.image
    for x in range(n):
        for y in range(n):
            if not (le[x][y] == le[L[y]][L[x]] == le[R[y]][R[x]]):
                return InvalidDocPoset("x <= y iff y^L <= x^L iff y^R <= x^R", (x, y))
    for x in range(n):
        if R[L[x]] != x or L[R[x]] != x:
            return InvalidDocPoset("x^LR = x = x^RL", (x,))
    if not (L[bot] == top == R[bot] and L[top] == bot == R[top]):
        return InvalidDocPoset("0^L = 1 = 0^R and 1^L = 0 = 1^R", (bot, top))
    return None


def make_docposet(poset: Poset, lcompl: Sequence[int] | UnaryMap, rcompl: Sequence[int] | UnaryMap,
                  labels: Sequence[str] | None = None) -> DocPoset:
    lc = lcompl if isinstance(lcompl, UnaryMap) else UnaryMap(tuple(lcompl))
    rc = rcompl if isinstance(rcompl, UnaryMap) else UnaryMap(tuple(rcompl))
    err = docposet_violation(poset, lc, rc)
    if err is not None:
        raise err
    carrier = Carrier(poset.size, poset.bottom(), poset.top(), tuple(labels) if labels else None)
    return DocPoset(poset, lc, rc, carrier)
