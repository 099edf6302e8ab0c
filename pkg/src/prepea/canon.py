"""Canonical forms by brute force over admissible relabelings.

Admissible permutations send the zero of a model to position ``0`` and the
unit (when present) to position ``n - 1``; for models already in that frame,
which is what every enumerator produces, they are exactly the permutations
fixing zero and unit.
For a bare :class:`Poset` there is no designated element, so permutations
are restricted instead to those that list elements in increasing order of
the isomorphism invariant ``(|down(x)|, -|up(x)|)``; two posets are
isomorphic iff their encodings agree under either convention, and the
restriction keeps an 8-element poset cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from . import kernels
from .errors import SizeLimitExceeded
from .structures import DocPoset, GppeaModel, Poset, WppeaModel

MAX_CANON_SIZE = 8

_HEADER_NONE = 255


@dataclass(frozen=True)
class CanonicalForm:
    perm: tuple[int, ...]  # perm[old] = new
    encoding: bytes


@lru_cache(maxsize=None)
def framing_perms(n: int, zero: int, unit: int | None = None) -> np.ndarray:
    """Permutations with ``perm[zero] = 0`` and ``perm[unit] = n - 1``."""
    pinned = {zero: 0}
    if unit is not None and n > 1:
        pinned[unit] = n - 1
    free_src = [x for x in range(n) if x not in pinned]
    free_dst = [x for x in range(n) if x not in pinned.values()]
    out = []
    for images in permutations(free_dst):
        perm = [0] * n
        for src, dst in pinned.items():
            perm[src] = dst
        for src, dst in zip(free_src, images):
            perm[src] = dst
        out.append(perm)
    return np.array(out, dtype=np.int32).reshape(len(out), n)


def _signature_perms(poset: Poset) -> np.ndarray:
    n = poset.size
    sig = [(len(poset.down(x)), -len(poset.up(x))) for x in range(n)]
    classes: dict[tuple, list[int]] = {}
    for x in range(n):
        classes.setdefault(sig[x], []).append(x)
    keys = sorted(classes)
    slots = []
    start = 0
    for k in keys:
        members = classes[k]
        slots.append((members, list(range(start, start + len(members)))))
        start += len(members)
    out = []
    for choice in product(*(permutations(pos) for _, pos in slots)):
        perm = [0] * n
        for (members, _), images in zip(slots, choice):
            for src, dst in zip(members, images):
                perm[src] = dst
        out.append(perm)
    return np.array(out, dtype=np.int32).reshape(len(out), n)


def _table_array(table) -> np.ndarray:
    return np.array([[-1 if v is None else v for v in row] for row in table.cells], dtype=np.int32)


def _parts(obj):
    n = obj.size if isinstance(obj, Poset) else obj.n
    empty_t = np.zeros((0, n, n), dtype=np.int32)
    empty_m = np.zeros((0, n), dtype=np.int32)
    empty_r = np.zeros((0, n, n), dtype=np.uint8)
    if isinstance(obj, WppeaModel):
        tables = np.stack([_table_array(obj.plus)])
        maps = np.array([obj.lsupp.image, obj.rsupp.image], dtype=np.int32)
        head = (ord("W"), n, 0, n - 1)
        return head, tables, maps, empty_r, framing_perms(n, obj.zero, obj.unit)
    if isinstance(obj, GppeaModel):
        tables = np.stack([_table_array(t) for t in (obj.plus, obj.rminus, obj.lminus)])
        head = (ord("G"), n, 0, _HEADER_NONE)
        return head, tables, empty_m, empty_r, framing_perms(n, obj.zero)
    if isinstance(obj, DocPoset):
        maps = np.array([obj.lcompl.image, obj.rcompl.image], dtype=np.int32)
        rels = np.array([obj.poset.leq], dtype=np.uint8)
        bot, top = obj.poset.bottom(), obj.poset.top()
        head = (ord("D"), n, 0, n - 1)
        return head, empty_t, maps, rels, framing_perms(n, bot, top)
    if isinstance(obj, Poset):
        rels = np.array([obj.leq], dtype=np.uint8)
        return (ord("P"), n, _HEADER_NONE, _HEADER_NONE), empty_t, empty_m, rels, _signature_perms(obj)
    raise TypeError(f"cannot canonicalize {type(obj).__name__}")


def canonical_form(obj) -> CanonicalForm:
    """Canonical relabeling and byte encoding; equal encodings iff isomorphic."""
    n = obj.size if isinstance(obj, Poset) else obj.n
    if n > MAX_CANON_SIZE:
        raise SizeLimitExceeded("canonical_form", n, MAX_CANON_SIZE)
    head, tables, maps, rels, perms = _parts(obj)
    idx, code = kernels.min_encoding(tables, maps, rels, perms)
    perm = tuple(int(v) for v in perms[idx])
    return CanonicalForm(perm, bytes(head) + code)


def canonicalize(obj):
    """Return the relabeled copy of ``obj`` that realises its canonical encoding."""
    return obj.relabel(canonical_form(obj).perm)


def is_isomorphic(x, y) -> bool:
    return type(x) is type(y) and canonical_form(x).encoding == canonical_form(y).encoding


def admissible_perms(obj) -> np.ndarray:
    return _parts(obj)[4]
