"""Orders read off a WPPEA candidate: the defining order and the summand orders."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotPartialOrder, TwoDefinitionsDisagree
from .structures import Poset, WppeaModel, first_order_violation


def order_disagreement(model: WppeaModel) -> tuple[int, int] | None:
    """First pair where ``a (+) b^R`` and ``b^L (+) a`` differ in definedness."""
    n = model.n
    p, L, R = model.plus.cells, model.lsupp.image, model.rsupp.image
    for a in range(n):
        for b in range(n):
            if (p[a][R[b]] is None) != (p[L[b]][a] is None):
                return (a, b)
    return None


def derived_order(model: WppeaModel) -> Poset:
    """``a <= b`` iff ``a (+) b^R`` is defined, checked against ``b^L (+) a``."""
    bad = order_disagreement(model)
    if bad is not None:
        raise TwoDefinitionsDisagree(*bad)
    n = model.n
    rel = [[model.le(a, b) for b in range(n)] for a in range(n)]
    err = first_order_violation(rel)
    if err is not None:
        raise err
    return Poset(tuple(map(tuple, rel)))


@dataclass(frozen=True)
class SummandOrders:
    """``a ⊑_L b`` iff ``a = d (+) b``; ``a ⊑_R b`` iff ``a = b (+) c``."""

    left: tuple[tuple[bool, ...], ...]
    right: tuple[tuple[bool, ...], ...]
    left_error: NotPartialOrder | None
    right_error: NotPartialOrder | None

    @property
    def left_is_order(self) -> bool:
        return self.left_error is None

    @property
    def right_is_order(self) -> bool:
        return self.right_error is None

    @property
    def coincide(self) -> bool:
        return self.left == self.right

    def difference(self) -> tuple[int, int] | None:
        n = len(self.left)
        for a in range(n):
            for b in range(n):
                if self.left[a][b] != self.right[a][b]:
                    return (a, b)
        return None

    def posets(self) -> tuple[Poset, Poset]:
        for err in (self.left_error, self.right_error):
            if err is not None:
                raise err
        return Poset(self.left), Poset(self.right)


def sq_orders(model: WppeaModel) -> SummandOrders:
    n = model.n
    p = model.plus.cells
    left = [[False] * n for _ in range(n)]
    right = [[False] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            s = p[x][y]
            if s is None:
                continue
            left[s][y] = True   # s = x (+) y, summed from the left onto y
            right[s][x] = True  # s = x (+) y, summed from the right onto x
    left_t = tuple(map(tuple, left))
    right_t = tuple(map(tuple, right))
    errs = []
    for side, rel in (("left", left_t), ("right", right_t)):
        err = first_order_violation(rel)
        if err is not None:
            err = type(err)(err.witness, side)
        errs.append(err)
    return SummandOrders(left_t, right_t, errs[0], errs[1])
