"""Exhaustive generation of small posets and models, up to isomorphism.

Outputs are canonical representatives (see :mod:`prepea.canon`) sorted by
their canonical encoding, so results do not depend on search order or on the
number of worker processes (``PREPEA_WORKERS``).
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .canon import canonical_form
from .checks import check_wppea
from .derive import derive_gppea_from_lminus
from .errors import DerivationFailed, OrderInvalid, SizeLimitExceeded
from .structures import (
    Carrier,
    DocPoset,
    GppeaModel,
    PartialBinTable,
    Poset,
    UnaryMap,
    WppeaModel,
)

MAX_POSET_SIZE = 8
MAX_WPPEA_SIZE = 7
MAX_GPPEA_SIZE = 7

_UNSET = -2


def worker_count() -> int:
    raw = os.environ.get("PREPEA_WORKERS", "")
    if raw.strip():
        try:
            return max(1, int(raw))
        except ValueError:
            pass
    return os.cpu_count() or 1


def _pmap(fn, items: list) -> list:
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _dedupe(objs) -> list:
    """Canonical representatives, one per isomorphism class, sorted by encoding."""
    seen: dict[bytes, object] = {}
    for obj in objs:
        cf = canonical_form(obj)
        if cf.encoding not in seen:
            seen[cf.encoding] = obj.relabel(cf.perm)
    return [seen[k] for k in sorted(seen)]


# -- posets ----------------------------------------------------------------


def _extend(rel: tuple, k: int) -> list[tuple]:
    """All ways to add a new maximal element above a down-closed subset."""
    out = []
    for mask in range(1 << k):
        below = [i for i in range(k) if mask >> i & 1]
        if any(rel[j][i] and not mask >> j & 1 for i in below for j in range(k)):
            continue
        rows = [list(r) + [bool(mask >> i & 1)] for i, r in enumerate(rel)]
        rows.append([False] * k + [True])
        out.append(tuple(map(tuple, rows)))
    return out


def all_posets(k: int) -> list[tuple]:
    """Relations of all posets on ``k`` elements, one per isomorphism class."""
    level: list[tuple] = [()]
    for size in range(k):
        grown = [r for rel in level for r in _extend(rel, size)]
        level = [p.leq for p in _dedupe(Poset(r) for r in grown)]
    return level


def _lift(middle: tuple, bottom: bool, top: bool) -> Poset:
    k = len(middle)
    n = k + int(bottom) + int(top)
    off = int(bottom)
    rel = [[a == b for b in range(n)] for a in range(n)]
    for i in range(k):
        for j in range(k):
            rel[i + off][j + off] = middle[i][j]
    for x in range(n):
        if bottom:
            rel[0][x] = True
        if top:
            rel[x][n - 1] = True
    return Poset(tuple(map(tuple, rel)))


def enumerate_bounded_posets(n: int) -> list[Poset]:
    """Bounded posets on ``n`` elements: bottom ``0``, top ``n - 1``."""
    if n < 2:
        raise ValueError("a bounded poset with distinct bottom and top needs n >= 2")
    if n > MAX_POSET_SIZE:
        raise SizeLimitExceeded("enumerate_bounded_posets", n, MAX_POSET_SIZE)
    return _dedupe(_lift(m, True, True) for m in all_posets(n - 2))


def enumerate_posets_with_bottom(n: int) -> list[Poset]:
    """Posets on ``n`` elements with a least element ``0``."""
    if n < 1:
        raise ValueError("n must be positive")
    if n > MAX_POSET_SIZE:
        raise SizeLimitExceeded("enumerate_posets_with_bottom", n, MAX_POSET_SIZE)
    return _dedupe(_lift(m, True, False) for m in all_posets(n - 1))


# -- double orthocomplementations ------------------------------------------


def anti_automorphisms(poset: Poset) -> list[tuple[int, ...]]:
    """Bijections ``r`` with ``x <= y`` iff ``r(y) <= r(x)``, in lexicographic order."""
    n = poset.size
    le = poset.leq
    out = []
    img = [-1] * n
    used = [False] * n

    def go(x):
        if x == n:
            out.append(tuple(img))
            return
        for v in range(n):
            if used[v]:
                continue
            if any(le[x][y] != le[img[y]][v] or le[y][x] != le[v][img[y]] for y in range(x)):
                continue
            if len(poset.down(x)) != len(poset.up(v)):
                continue
            img[x], used[v] = v, True
            go(x + 1)
            used[v] = False
        img[x] = -1

    go(0)
    return out


def enumerate_docposets(poset: Poset) -> list[DocPoset]:
    """All double orthocomplementations on ``poset``, up to isomorphism.

    ``^R`` ranges over anti-automorphisms and ``^L`` is its inverse; these
    are exactly the pairs meeting the three defining conditions.
    """
    bot, top = poset.bottom(), poset.top()
    if bot is None or top is None:
        return []
    out = []
    for r in anti_automorphisms(poset):
        R = UnaryMap(r)
        out.append(DocPoset(poset, R.inverse(), R, Carrier(poset.size, bot, top)))
    return _dedupe(out)


# -- WPPEA -----------------------------------------------------------------


def _partial_assoc_ok(t: list[list[int]], n: int) -> bool:
    """Associativity on every triple whose four lookups are already decided."""
    for a in range(n):
        ta = t[a]
        for b in range(n):
            ab = ta[b]
            if ab == _UNSET:
                continue
            tb = t[b]
            for c in range(n):
                bc = tb[c]
                if bc == _UNSET:
                    continue
                lhs = -1 if ab < 0 else t[ab][c]
                rhs = -1 if bc < 0 else ta[bc]
                if lhs == _UNSET or rhs == _UNSET:
                    continue
                if lhs != rhs:
                    return False
    return True


def _wppea_for_supplement(args) -> list[WppeaModel]:
    poset, r = args
    n = poset.size
    le = poset.leq
    zero, unit = poset.bottom(), poset.top()
    R = list(r)
    L = [0] * n
    for x, y in enumerate(R):
        L[y] = x
    t = [[-1] * n for _ in range(n)]
    free: list[tuple[int, int, list[int]]] = []
    for x in range(n):
        for y in range(n):
            if not le[x][L[y]]:
                continue
            if x == zero:
                t[x][y] = y
            elif y == zero:
                t[x][y] = x
            elif y == R[x]:
                t[x][y] = unit
            else:
                cands = [c for c in range(n) if le[x][c] and le[y][c] and c not in (x, y, zero)]
                if not cands:
                    return []
                t[x][y] = _UNSET
                free.append((x, y, cands))
    carrier = Carrier(n, zero, unit)
    lmap, rmap = UnaryMap(tuple(L)), UnaryMap(tuple(R))
    found = []

    def go(i):
        if not _partial_assoc_ok(t, n):
            return
        if i == len(free):
            cells = tuple(tuple(None if v < 0 else v for v in row) for row in t)
            m = WppeaModel(carrier, PartialBinTable(cells), lmap, rmap)
            if check_wppea(m).overall:
                found.append(m)
            return
        x, y, cands = free[i]
        for c in cands:
            t[x][y] = c
            go(i + 1)
        t[x][y] = _UNSET

    go(0)
    return found


def enumerate_wppea(poset: Poset) -> list[WppeaModel]:
    """Every WPPEA whose order is ``poset``, up to isomorphism.

    The supplements are searched first: ``^R`` must be an anti-automorphism
    and ``^L`` its inverse.  That fixes which sums are defined
    (``x (+) y`` iff ``x <= y^L``) and the sums with ``0`` and with a
    supplement; the remaining cells take values above both summands and are
    filled by backtracking with associativity pruning.
    """
    n = poset.size
    if n > MAX_WPPEA_SIZE:
        raise SizeLimitExceeded("enumerate_wppea", n, MAX_WPPEA_SIZE)
    if poset.bottom() is None or poset.top() is None:
        return []
    tasks = [(poset, r) for r in anti_automorphisms(poset)]
    found = [m for part in _pmap(_wppea_for_supplement, tasks) for m in part]
    return _dedupe(found)


# -- GPPEA -----------------------------------------------------------------


def lminus_candidates(poset: Poset):
    """Left-minus tables with ``a/b`` defined iff ``b <= a``, ``a/0 = a``,
    ``a/a = 0``, ``a/b < a`` for ``b != 0``, and ``a/c >= b/c`` when
    ``a >= b >= c``; all are necessary in a generalized model.
    """
    n = poset.size
    le = poset.leq
    zero = poset.bottom()
    t = [[None] * n for _ in range(n)]
    free = []
    for a in range(n):
        for b in range(n):
            if not le[b][a]:
                continue
            if b == zero:
                t[a][b] = a
            elif a == b:
                t[a][b] = zero
            else:
                free.append((a, b, [c for c in range(n) if le[c][a] and c != a]))
                t[a][b] = _UNSET

    def consistent(a, c) -> bool:
        v = t[a][c]
        for b in range(n):
            w = t[b][c]
            if w is None or w == _UNSET:
                continue
            if le[b][a] and not le[w][v]:
                return False
            if le[a][b] and not le[v][w]:
                return False
        return True

    def go(i):
        if i == len(free):
            yield PartialBinTable(tuple(map(tuple, t)))
            return
        a, b, cands = free[i]
        for c in cands:
            t[a][b] = c
            if consistent(a, b):
                yield from go(i + 1)
        t[a][b] = _UNSET

    yield from go(0)


def _gppea_for_poset(poset: Poset) -> list[GppeaModel]:
    zero = poset.bottom()
    out = []
    for lm in lminus_candidates(poset):
        try:
            model, report = derive_gppea_from_lminus(lm, zero=zero)
        except (DerivationFailed, OrderInvalid):
            continue
        if report.overall:
            out.append(model)
    return out


def enumerate_gppea(poset: Poset) -> list[GppeaModel]:
    """Every generalized model on ``poset`` (which needs a bottom), up to isomorphism.

    Candidates for ``/`` are generated and completed through the
    reconstruction pipeline; only completions passing all axioms are kept.
    """
    n = poset.size
    if n > MAX_GPPEA_SIZE:
        raise SizeLimitExceeded("enumerate_gppea", n, MAX_GPPEA_SIZE)
    if poset.bottom() is None:
        return []
    return _dedupe(_gppea_for_poset(poset))


def all_gppea(n: int) -> list[GppeaModel]:
    """Generalized models of size ``n`` over every poset with a bottom."""
    posets = enumerate_posets_with_bottom(n)
    return _dedupe(m for part in _pmap(enumerate_gppea, posets) for m in part)


def all_wppea(n: int) -> list[WppeaModel]:
    posets = enumerate_bounded_posets(n)
    return [m for part in _pmap(enumerate_wppea, posets) for m in part]


# -- summary ---------------------------------------------------------------


@dataclass(frozen=True)
class OrderRow:
    index: int
    covers: tuple[tuple[int, int], ...]
    docposets: int
    wppea: int


@dataclass(frozen=True)
class CountSummary:
    n: int
    rows: tuple[OrderRow, ...]
    posets_with_bottom: int | None = None
    gppea: int | None = None

    @property
    def bounded_posets(self) -> int:
        return len(self.rows)

    @property
    def wppea_admissible(self) -> int:
        return sum(1 for r in self.rows if r.wppea)

    @property
    def docposet_admissible(self) -> int:
        return sum(1 for r in self.rows if r.docposets)

    @property
    def wppea_models(self) -> int:
        return sum(r.wppea for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "bounded_posets": self.bounded_posets,
            "wppea_admissible": self.wppea_admissible,
            "docposet_admissible": self.docposet_admissible,
            "wppea_models": self.wppea_models,
            "posets_with_bottom": self.posets_with_bottom,
            "gppea_models": self.gppea,
            "orders": [{"index": r.index, "covers": [list(c) for c in r.covers],
                        "docposets": r.docposets, "wppea": r.wppea} for r in self.rows],
        }


def _row_counts(poset: Poset) -> tuple[int, int]:
    return len(enumerate_docposets(poset)), len(enumerate_wppea(poset))


def count_summary(n: int, with_gppea: bool | None = None) -> CountSummary:
    """Counts per bounded order plus, for small ``n``, the number of generalized models."""
    posets = enumerate_bounded_posets(n) if n >= 2 else []
    counts = _pmap(_row_counts, posets) if n <= MAX_WPPEA_SIZE else [(0, 0)] * len(posets)
    rows = tuple(OrderRow(i + 1, tuple(p.covers()), d, w) for i, (p, (d, w)) in enumerate(zip(posets, counts)))
    if with_gppea is None:
        with_gppea = n <= 5
    pb = gp = None
    if with_gppea:
        pb = len(enumerate_posets_with_bottom(n))
        gp = len(all_gppea(n))
    return CountSummary(n, rows, pb, gp)
