"""Congruences on generalized models and the block-level quotient.

For blocks ``[a]``, ``[b]`` and an operation ``op`` in ``+``, ``/``, ``\\`` the
class-level set ``[a] op [b]`` collects every defined ``a' op b'`` with
``a'`` in ``[a]`` and ``b'`` in ``[b]``; it counts as defined iff non-empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .checks import CheckReport, check_gppea
from .errors import (
    InvalidPartition,
    MultiValuedCell,
    NotWeakCongruence,
    PreconditionFailed,
    SizeLimitExceeded,
)
from .properties import PropertyVerdict
from .structures import Carrier, GppeaModel, PartialBinTable

MAX_CONGRUENCE_SIZE = 7

OP_TABLES = (("+", "plus"), ("/", "lminus"), ("\\", "rminus"))


@dataclass(frozen=True)
class Partition:
    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]

    @classmethod
    def from_blocks(cls, blocks, n: int) -> Partition:
        bl = [tuple(sorted(set(b))) for b in blocks]
        if any(not b for b in bl):
            raise InvalidPartition("empty block")
        flat = [x for b in bl for x in b]
        if sorted(flat) != list(range(n)):
            raise InvalidPartition(f"blocks do not partition 0..{n - 1} exactly")
        bl.sort()
        block_of = [0] * n
        for i, b in enumerate(bl):
            for x in b:
                block_of[x] = i
        return cls(tuple(bl), tuple(block_of))

    @classmethod
    def from_labels(cls, labels) -> Partition:
        groups: dict = {}
        for x, lab in enumerate(labels):
            groups.setdefault(lab, []).append(x)
        return cls.from_blocks(groups.values(), len(labels))

    @classmethod
    def identity(cls, n: int) -> Partition:
        return cls.from_blocks([[x] for x in range(n)], n)

    @classmethod
    def single(cls, n: int) -> Partition:
        return cls.from_blocks([list(range(n))], n)

    @property
    def n(self) -> int:
        return len(self.block_of)

    def same(self, a: int, b: int) -> bool:
        return self.block_of[a] == self.block_of[b]

    def render(self, names=None) -> str:
        nm = (lambda x: names[x]) if names else str
        return " | ".join(" ".join(nm(x) for x in b) for b in self.blocks)


def parse_partition(text: str, names) -> Partition:
    """``"0 | a b | 1"``: blocks separated by ``|``, elements by spaces or commas."""
    index = {x: i for i, x in enumerate(names)}
    blocks = []
    for chunk in text.split("|"):
        toks = chunk.replace(",", " ").split()
        try:
            blocks.append([index[t] for t in toks])
        except KeyError as exc:
            raise InvalidPartition(f"unknown element {exc.args[0]!r}") from None
    return Partition.from_blocks(blocks, len(names))


def _tables(model: GppeaModel):
    return [(sym, getattr(model, attr).cells) for sym, attr in OP_TABLES]


def check_weak_congruence(model: GppeaModel, part: Partition) -> PropertyVerdict:
    """Equivalent defined arguments give equivalent results, for all three operations.

    Witness ``(op, a1, b1, a2, b2)``.
    """
    if part.n != model.n:
        raise InvalidPartition("partition size differs from model size")
    bo = part.block_of
    n = model.n
    for sym, t in _tables(model):
        for a1, b1, a2, b2 in product(range(n), repeat=4):
            if bo[a1] != bo[a2] or bo[b1] != bo[b2]:
                continue
            u, v = t[a1][b1], t[a2][b2]
            if u is not None and v is not None and bo[u] != bo[v]:
                return PropertyVerdict("WeakCongruence", False, (sym, a1, b1, a2, b2))
    return PropertyVerdict("WeakCongruence", True)


def class_values(t, part: Partition, i: int, j: int) -> set[int]:
    return {t[x][y] for x in part.blocks[i] for y in part.blocks[j] if t[x][y] is not None}


def check_congruence(model: GppeaModel, part: Partition) -> PropertyVerdict:
    """Weak congruence plus realization and definedness on both sides.

    Witness ``(clause, op, a, b, x)`` with ``a``, ``b`` the least members of
    the two argument blocks and ``x`` the offending element: an unrealized
    member of the result block, or an argument with no partner.
    """
    weak = check_weak_congruence(model, part)
    if not weak.holds:
        raise NotWeakCongruence(f"not a weak congruence at {weak.witness}", weak)
    k = len(part.blocks)
    for sym, t in _tables(model):
        for i, j in product(range(k), repeat=2):
            vals = class_values(t, part, i, j)
            if not vals:
                continue
            A, B = part.blocks[i], part.blocks[j]
            target = part.blocks[part.block_of[next(iter(vals))]]
            for x in target:
                if x not in vals:
                    return PropertyVerdict("Congruence", False, ("realization", sym, A[0], B[0], x))
            for x in A:
                if all(t[x][y] is None for y in B):
                    return PropertyVerdict("Congruence", False, ("left-definedness", sym, A[0], B[0], x))
            for y in B:
                if all(t[x][y] is None for x in A):
                    return PropertyVerdict("Congruence", False, ("right-definedness", sym, A[0], B[0], y))
    return PropertyVerdict("Congruence", True)


def set_partitions(n: int):
    """All partitions of ``0..n-1`` as restricted growth strings, lexicographically."""
    rgs = [0] * n

    def go(i, top):
        if i == n:
            yield Partition.from_labels(rgs)
            return
        for v in range(top + 2):
            rgs[i] = v
            yield from go(i + 1, max(top, v))

    if n == 0:
        return
    rgs[0] = 0
    yield from go(1, 0)


def enumerate_congruences(model: GppeaModel) -> list[Partition]:
    """Every congruence of ``model``, in restricted-growth order."""
    n = model.n
    if n > MAX_CONGRUENCE_SIZE:
        raise SizeLimitExceeded("enumerate_congruences", n, MAX_CONGRUENCE_SIZE)
    out = []
    for part in set_partitions(n):
        if check_weak_congruence(model, part).holds and check_congruence(model, part).holds:
            out.append(part)
    return out


def quotient(model: GppeaModel, part: Partition) -> tuple[GppeaModel, CheckReport]:
    """Block-level tables and their axiom report; the report may fail."""
    verdict = check_congruence(model, part)
    if not verdict.holds:
        raise PreconditionFailed(f"not a congruence: {verdict.witness}", verdict)
    k = len(part.blocks)
    tables = {}
    for sym, attr in OP_TABLES:
        t = getattr(model, attr).cells
        cells = [[None] * k for _ in range(k)]
        for i, j in product(range(k), repeat=2):
            vals = class_values(t, part, i, j)
            blocks = {part.block_of[v] for v in vals}
            if len(blocks) > 1:
                raise MultiValuedCell(sym, part.blocks[i][0], part.blocks[j][0], blocks)
            if blocks:
                cells[i][j] = blocks.pop()
        tables[attr] = PartialBinTable(tuple(map(tuple, cells)))
    names = model.carrier.names
    labels = tuple("[" + names[b[0]] + "]" for b in part.blocks)
    carrier = Carrier(k, part.block_of[model.zero], None, labels)
    q = GppeaModel(carrier, tables["plus"], tables["rminus"], tables["lminus"])
    return q, check_gppea(q)


def check_quotient_lemmas(q: GppeaModel) -> list[PropertyVerdict]:
    """``[a]+[b] = [0]`` forces both to be ``[0]``; if ``[a]/[b]`` and ``[b]/[a]``
    are both defined then ``[a]/[b] = [0]``.
    """
    n, z = q.n, q.zero
    p, lm = q.plus.cells, q.lminus.cells
    zero_sum = next(((a, b) for a, b in product(range(n), repeat=2)
                     if p[a][b] == z and not a == b == z), None)
    mutual = next(((a, b) for a, b in product(range(n), repeat=2)
                   if lm[a][b] is not None and lm[b][a] is not None and lm[a][b] != z), None)
    return [
        PropertyVerdict("QuotientZeroSum", zero_sum is None, zero_sum or ()),
        PropertyVerdict("QuotientMutualDifference", mutual is None, mutual or ()),
    ]
