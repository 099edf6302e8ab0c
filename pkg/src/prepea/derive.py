"""Rebuilding a generalized structure from part of its operations.

* :func:`minus_from_plus` reads ``a\\b`` and ``a/b`` off ``+`` and the order as
  the largest ``z`` with ``z+b <= a`` (resp. ``b+z <= a``).
* :func:`plus_from_rminus` / :func:`plus_from_lminus` read the order off a
  minus table and ``a+b`` as the infimum of ``{z : a <= z\\b}`` (resp.
  ``{z : b <= z/a}``); an empty set means ``a+b`` is undefined.

The two extremum notions differ on purpose.  ``a\\b`` must itself lie in its
candidate set (``(a\\b)+b <= a``), so a set is only accepted when it has a
greatest *member*; a least upper bound found outside the set would produce a
value that violates the very inequality it is meant to witness.  The sum, on
the other hand, is defined as the infimum taken in the whole poset.

Failures are returned as data so that failing candidates can be replayed.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .checks import CheckReport, check_gppea
from .errors import DerivationFailed, FormulaUndefined, OrderInvalid
from .structures import (
    Carrier,
    GppeaModel,
    PartialBinTable,
    Poset,
    WppeaModel,
    first_order_violation,
)

RMINUS, LMINUS, PLUS = "\\", "/", "+"

_SET_NAMES = {RMINUS: "R", LMINUS: "L"}


@dataclass(frozen=True)
class DerivationFailure:
    """A non-empty candidate set without the required extremum.

    ``members`` is the whole set; ``competitors`` are its maximal elements
    (minus derivations) or minimal elements (plus derivations).  For a plus
    failure ``bound_tops`` lists the maximal lower bounds of the set, of
    which there are zero or at least two.
    """

    pair: tuple[int, int]
    op: str
    reason: str  # "NoSupremum" | "NoInfimum"
    set_name: str
    members: tuple[int, ...]
    competitors: tuple[int, ...]
    bound_tops: tuple[int, ...] = ()

    def describe(self, names=None) -> str:
        nm = (lambda x: names[x]) if names else str
        a, b = self.pair
        members = ", ".join(nm(x) for x in self.members)
        what = "no supremum" if self.reason == "NoSupremum" else "no infimum"
        comp = ", ".join(nm(x) for x in self.competitors)
        extra = "maximal" if self.reason == "NoSupremum" else "minimal"
        return (f"{self.set_name}_{{{nm(a)},{nm(b)}}} = {{{members}}}: {what}"
                f" ({extra} elements {{{comp}}})")

    def to_dict(self) -> dict:
        return {"pair": list(self.pair), "op": self.op, "reason": self.reason,
                "set": self.set_name, "members": list(self.members),
                "competitors": list(self.competitors), "bound_tops": list(self.bound_tops)}


@dataclass(frozen=True)
class Override:
    """A diagonal cell forced to zero although the candidate set gave something else."""

    pair: tuple[int, int]
    op: str
    computed: int | None


@dataclass(frozen=True)
class DerivationOutcome:
    result: tuple
    failures: tuple[DerivationFailure, ...] = ()
    overrides: tuple[Override, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.failures


def _order_of(order) -> Poset:
    return order if isinstance(order, Poset) else Poset(tuple(tuple(bool(v) for v in r) for r in order))


def minus_from_plus(plus: PartialBinTable, order, zero: int = 0,
                    diagonal_zero: bool = True) -> DerivationOutcome:
    """Both minus tables from ``+`` and the order.

    ``result`` is ``(rminus, lminus)``.  Cells are filled only for ``a >= b``
    with a greatest element in the candidate set; failing cells stay
    undefined.  With ``diagonal_zero`` the cells ``a\\a`` and ``a/a`` are set
    to ``zero`` as the first axiom demands, and every cell where this changed
    the computed value is listed in ``overrides``.
    """
    po = _order_of(order)
    n = po.size
    p = plus.cells
    le = po.leq
    rm = [[None] * n for _ in range(n)]
    lm = [[None] * n for _ in range(n)]
    failures, overrides = [], []
    for a in range(n):
        for b in range(n):
            if not le[b][a]:
                continue
            for op, out in ((RMINUS, rm), (LMINUS, lm)):
                if op == RMINUS:
                    members = tuple(z for z in range(n) if p[z][b] is not None and le[p[z][b]][a])
                else:
                    members = tuple(z for z in range(n) if p[b][z] is not None and le[p[b][z]][a])
                value = po.greatest(members) if members else None
                failure = None
                if members and value is None:
                    failure = DerivationFailure((a, b), op, "NoSupremum", _SET_NAMES[op],
                                                members, po.maximal(members))
                if diagonal_zero and a == b:
                    if value != zero:
                        overrides.append(Override((a, b), op, value))
                    value, failure = zero, None
                if failure is not None:
                    failures.append(failure)
                out[a][b] = value
    result = (PartialBinTable(tuple(map(tuple, rm))), PartialBinTable(tuple(map(tuple, lm))))
    return DerivationOutcome(result, tuple(failures), tuple(overrides))


def order_from_minus(minus: PartialBinTable) -> Poset:
    """``a <= b`` iff ``b - a`` is defined; raises :class:`OrderInvalid` otherwise."""
    n = minus.size
    rel = [[minus.cells[b][a] is not None for b in range(n)] for a in range(n)]
    err = first_order_violation(rel)
    if err is not None:
        raise OrderInvalid(err)
    return Poset(tuple(map(tuple, rel)))


def plus_candidates(minus: PartialBinTable, po: Poset, a: int, b: int, left: bool) -> tuple[int, ...]:
    """``{z : b <= z/a}`` when ``left``, else ``{z : a <= z\\b}``; ``a+b`` is its infimum."""
    m, le = minus.cells, po.leq
    if left:
        return tuple(z for z in range(po.size) if m[z][a] is not None and le[b][m[z][a]])
    return tuple(z for z in range(po.size) if m[z][b] is not None and le[a][m[z][b]])


def _plus_from(minus: PartialBinTable, left: bool) -> DerivationOutcome:
    po = order_from_minus(minus)
    n = po.size
    plus = [[None] * n for _ in range(n)]
    failures = []
    name = "P^l" if left else "P"
    for a in range(n):
        for b in range(n):
            members = plus_candidates(minus, po, a, b, left)
            if not members:
                continue
            value = po.glb(members)
            if value is None:
                bounds = po.lower_bounds(members)
                failures.append(DerivationFailure((a, b), PLUS, "NoInfimum", name, members,
                                                  po.minimal(members), po.maximal(bounds)))
            plus[a][b] = value
    return DerivationOutcome((po, PartialBinTable(tuple(map(tuple, plus)))), tuple(failures))


def plus_from_rminus(rminus: PartialBinTable) -> DerivationOutcome:
    """Order and ``+`` from ``\\``: ``a+b = inf {z : a <= z\\b}``.  ``result`` is ``(Poset, plus)``."""
    return _plus_from(rminus, left=False)


def plus_from_lminus(lminus: PartialBinTable) -> DerivationOutcome:
    """Order and ``+`` from ``/``: ``a+b = inf {z : b <= z/a}``.  ``result`` is ``(Poset, plus)``."""
    return _plus_from(lminus, left=True)


def derive_gppea_from_lminus(lminus: PartialBinTable, zero: int = 0,
                             labels=None) -> tuple[GppeaModel, CheckReport]:
    """``/`` to order and ``+``, then ``+`` to ``\\``, then check the result.

    The assembled candidate keeps the given ``/``.  Raises
    :class:`DerivationFailed` when either derivation step has failures;
    axiom failures of the assembled candidate are reported, not raised.
    """
    first = plus_from_lminus(lminus)
    if first.failures:
        raise DerivationFailed(first.failures)
    order, plus = first.result
    second = minus_from_plus(plus, order, zero=zero)
    if second.failures:
        raise DerivationFailed(second.failures)
    rminus, _ = second.result
    model = GppeaModel(Carrier(lminus.size, zero, None, labels), plus, rminus, lminus)
    return model, check_gppea(model)


def derive_gppea_from_rminus(rminus: PartialBinTable, zero: int = 0,
                             labels=None) -> tuple[GppeaModel, CheckReport]:
    """Mirror of :func:`derive_gppea_from_lminus` starting from ``\\``."""
    first = plus_from_rminus(rminus)
    if first.failures:
        raise DerivationFailed(first.failures)
    order, plus = first.result
    second = minus_from_plus(plus, order, zero=zero)
    if second.failures:
        raise DerivationFailed(second.failures)
    _, lminus = second.result
    model = GppeaModel(Carrier(rminus.size, zero, None, labels), plus, rminus, lminus)
    return model, check_gppea(model)


def explicit_minus(model: WppeaModel) -> tuple[PartialBinTable, PartialBinTable]:
    """``a\\b = (b + a^R)^L`` and ``a/b = (a^L + b)^R`` for ``a >= b``.

    Returns ``(rminus, lminus)``.  Raises :class:`FormulaUndefined` when a
    needed sum is missing although ``a >= b``.
    """
    n = model.n
    p, L, R = model.plus.cells, model.lsupp.image, model.rsupp.image
    rm = [[None] * n for _ in range(n)]
    lm = [[None] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            if not model.le(b, a):
                continue
            s = p[b][R[a]]
            if s is None:
                raise FormulaUndefined(a, b, "right")
            rm[a][b] = L[s]
            t = p[L[a]][b]
            if t is None:
                raise FormulaUndefined(a, b, "left")
            lm[a][b] = R[t]
    return PartialBinTable(tuple(map(tuple, rm))), PartialBinTable(tuple(map(tuple, lm)))
