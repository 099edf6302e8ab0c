"""Explicit constructions between the bounded and the generalized structures."""

from __future__ import annotations

from .checks import check_gppea, check_wppea
from .derive import LMINUS, minus_from_plus
from .errors import (
    DefinednessClash,
    InternalInconsistency,
    NoBottom,
    NoSupremum,
    PreconditionFailed,
)
from .orders import derived_order
from .structures import (
    Carrier,
    DocPoset,
    GppeaModel,
    PartialBinTable,
    Poset,
    UnaryMap,
    WppeaModel,
    docposet_violation,
    make_docposet,
)


def unitize(model: GppeaModel) -> WppeaModel:
    """Adjoin a disjoint copy ``A*`` and make ``0*`` the unit.

    Element ``a*`` is ``a + n``.  Sums inside ``A`` are kept;
    ``a + b* = (b\\a)*`` and ``b* + a = (b/a)*`` when ``b >= a``;
    starred elements never add; both supplements swap ``a`` and ``a*``.
    """
    report = check_gppea(model)
    if not report.overall:
        raise PreconditionFailed("unitization needs a model passing the generalized axioms", report)
    n = model.n
    p, rm, lm = model.plus.cells, model.rminus.cells, model.lminus.cells
    cells = [[None] * (2 * n) for _ in range(2 * n)]
    for a in range(n):
        for b in range(n):
            cells[a][b] = p[a][b]
            if rm[b][a] is not None:
                cells[a][b + n] = rm[b][a] + n
                cells[b + n][a] = lm[b][a] + n
    swap = UnaryMap(tuple(list(range(n, 2 * n)) + list(range(n))))
    names = model.carrier.names
    carrier = Carrier(2 * n, model.zero, model.zero + n, tuple(names) + tuple(x + "*" for x in names))
    return WppeaModel(carrier, PartialBinTable(tuple(map(tuple, cells))), swap, swap)


def wppea_from_docposet(dp: DocPoset) -> WppeaModel:
    """``x (+) y`` defined iff ``x <= y^L``; it is ``1`` unless one side is ``0``."""
    err = docposet_violation(dp.poset, dp.lcompl, dp.rcompl)
    if err is not None:
        raise err
    n = dp.n
    le = dp.poset.leq
    L, R = dp.lcompl.image, dp.rcompl.image
    zero, unit = dp.poset.bottom(), dp.poset.top()
    cells = [[None] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            if le[x][L[y]] != le[y][R[x]]:
                raise DefinednessClash(x, y)
            if not le[x][L[y]]:
                continue
            if x == zero:
                cells[x][y] = y
            elif y == zero:
                cells[x][y] = x
            else:
                cells[x][y] = unit
    carrier = Carrier(n, zero, unit, dp.carrier.labels)
    return WppeaModel(carrier, PartialBinTable(tuple(map(tuple, cells))), dp.lcompl, dp.rcompl)


def docposet_reduct(model: WppeaModel) -> DocPoset:
    """Forget the sum, keeping the order and both supplements."""
    report = check_wppea(model)
    if not report.overall:
        raise PreconditionFailed("reduct needs a model passing the axioms", report)
    return make_docposet(derived_order(model), model.lsupp, model.rsupp, model.carrier.labels)


def trivial_gppea_from_poset(poset: Poset, labels=None) -> GppeaModel:
    """Only sums with ``0``; ``x/y = x\\y = 0`` for ``0 < y <= x`` and ``x/0 = x\\0 = x``."""
    zero = poset.bottom()
    if zero is None:
        raise NoBottom("poset has no bottom element")
    n = poset.size
    le = poset.leq

    def plus(x, y):
        if x == zero:
            return y
        if y == zero:
            return x
        return None

    def minus(x, y):
        if not le[y][x]:
            return None
        return x if y == zero else zero

    m = PartialBinTable.from_function(n, minus)
    return GppeaModel(Carrier(n, zero, None, labels), PartialBinTable.from_function(n, plus), m, m)


def restrict_wppea_to_gppea(model: WppeaModel) -> GppeaModel:
    """Keep ``+`` and the order; ``a/b`` and ``a\\b`` are the largest ``k`` with
    ``b+k <= a`` and ``k+b <= a``.

    Raises :class:`NoSupremum` with the offending set when one is missing.
    """
    report = check_wppea(model)
    if not report.overall:
        raise PreconditionFailed("restriction needs a model passing the axioms", report)
    order = derived_order(model)
    outcome = minus_from_plus(model.plus, order, zero=model.zero, diagonal_zero=False)
    if outcome.failures:
        f = outcome.failures[0]
        raise NoSupremum(f.pair[0], f.pair[1], "L" if f.op == LMINUS else "R", f.members)
    rminus, lminus = outcome.result
    out = GppeaModel(Carrier(model.n, model.zero, None, model.carrier.labels), model.plus, rminus, lminus)
    check = check_gppea(out)
    if not check.overall:
        raise InternalInconsistency(f"restriction fails the generalized axioms: {check.failures()}")
    return out
