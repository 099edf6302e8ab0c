"""Riesz decomposition and interpolation, plus three difference-based variants.

Each checker scans every instance in row-major order.  The verdict carries
the first failing tuple as ``witness`` and every failing tuple in
``counterexamples``; :func:`holds_at` re-evaluates one instance alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .structures import GppeaModel

RDP, RIP = "RDP", "RIP"
LMODRIP, RMODRIP, LRMODRIP = "LmodRIP", "RmodRIP", "LRmodRIP"
MODIFIED = (LMODRIP, RMODRIP, LRMODRIP)


@dataclass(frozen=True)
class PropertyVerdict:
    property: str
    holds: bool
    witness: tuple = ()
    counterexamples: tuple = ()
    detail: str = ""

    def to_dict(self) -> dict:
        return {"property": self.property, "holds": self.holds, "witness": list(self.witness),
                "counterexamples": [list(c) for c in self.counterexamples],
                **({"detail": self.detail} if self.detail else {})}

    def render(self, names=None) -> str:
        if self.holds:
            return f"{self.property}: holds"
        w = ", ".join(names[x] if names and isinstance(x, int) else str(x) for x in self.witness)
        extra = f" [{self.detail}]" if self.detail else ""
        return f"{self.property}: fails ({w}){extra}"


class _Ctx:
    def __init__(self, model: GppeaModel):
        self.n = model.n
        self.z = model.zero
        self.p = model.plus.cells
        self.rm = model.rminus.cells
        self.lm = model.lminus.cells
        n = self.n
        self.le = [[self.rm[b][a] is not None for b in range(n)] for a in range(n)]
        self.parts: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for x in range(n):
            for y in range(n):
                s = self.p[x][y]
                if s is not None:
                    self.parts[s].append((x, y))

    @staticmethod
    def op(t, x, y):
        if x is None or y is None:
            return None
        return t[x][y]


def _rdp_instance(c: _Ctx, a1, a2, b1, b2) -> bool:
    s = c.p[a1][a2]
    if s is None or s != c.p[b1][b2]:
        return True
    for c11, c12 in c.parts[a1]:
        for c21, c22 in c.parts[a2]:
            if c.p[c11][c21] == b1 and c.p[c12][c22] == b2:
                return True
    return False


def _rip_instance(c: _Ctx, a, b1, b2) -> bool:
    s = c.p[b1][b2]
    if s is None or not c.le[a][s]:
        return True
    return any(c.le[x][b1] and c.le[y][b2] for x, y in c.parts[a])


def _mod_instance(variant: str):
    def decomposes(c: _Ctx, a, a1, a2) -> bool:
        z, op = c.z, _Ctx.op
        s = c.p[a1][a2]
        if s is None:
            return False
        if variant == LMODRIP:
            return op(c.lm, op(c.lm, a, a1), a2) == z and c.lm[a][s] == z
        if variant == RMODRIP:
            return op(c.rm, op(c.rm, a, a2), a1) == z and c.rm[a][s] == z
        return op(c.rm, op(c.lm, a, a1), a2) == z

    def instance(c: _Ctx, a, b1, b2) -> bool:
        s = c.p[b1][b2]
        if s is None or not c.le[a][s]:
            return True
        for a1 in range(c.n):
            if not c.le[a1][b1]:
                continue
            for a2 in range(c.n):
                if c.le[a2][b2] and decomposes(c, a, a1, a2):
                    return True
        return False

    return instance


_INSTANCES = {
    RDP: (4, _rdp_instance),
    RIP: (3, _rip_instance),
    LMODRIP: (3, _mod_instance(LMODRIP)),
    RMODRIP: (3, _mod_instance(RMODRIP)),
    LRMODRIP: (3, _mod_instance(LRMODRIP)),
}


def _scan(model: GppeaModel, prop: str) -> PropertyVerdict:
    arity, inst = _INSTANCES[prop]
    c = _Ctx(model)
    bad = tuple(args for args in product(range(c.n), repeat=arity) if not inst(c, *args))
    return PropertyVerdict(prop, not bad, bad[0] if bad else (), bad)


def check_rdp(model: GppeaModel) -> PropertyVerdict:
    """Every ``a1+a2 = b1+b2`` refines through a 2x2 matrix; witness ``(a1, a2, b1, b2)``."""
    return _scan(model, RDP)


def check_rip(model: GppeaModel) -> PropertyVerdict:
    """Every ``a <= b1+b2`` is ``a1+a2`` with ``ai <= bi``; witness ``(a, b1, b2)``."""
    return _scan(model, RIP)


def check_modified_rip(model: GppeaModel, variant: str) -> PropertyVerdict:
    """For every ``a <= b1+b2`` some ``a1 <= b1``, ``a2 <= b2`` with ``a1+a2`` defined and

    * LmodRIP:  ``(a/a1)/a2 = 0 = a/(a1+a2)``
    * RmodRIP:  ``(a\\a2)\\a1 = 0 = a\\(a1+a2)``
    * LRmodRIP: ``(a/a1)\\a2 = 0``

    every operation involved being defined.  Witness ``(a, b1, b2)``.
    """
    if variant not in MODIFIED:
        raise ValueError(f"unknown variant {variant!r}; expected one of {MODIFIED}")
    return _scan(model, variant)


def holds_at(model: GppeaModel, prop: str, args: tuple[int, ...]) -> bool:
    arity, inst = _INSTANCES[prop]
    if len(args) != arity:
        raise ValueError(f"{prop} takes {arity} elements")
    return inst(_Ctx(model), *args)


def check_all(model: GppeaModel, props=(RDP, RIP) + MODIFIED) -> list[PropertyVerdict]:
    return [_scan(model, p) for p in props]
