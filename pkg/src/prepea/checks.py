"""Axiom and derived-property checkers with minimal witnesses.

Every axiom is a predicate over a fixed number of elements.  A checker scans
all tuples in row-major order and reports the first failing tuple, so the
witness is the lexicographically least one and can be re-evaluated on its
own with :func:`evaluate`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable

import numpy as np

from . import kernels
from .errors import AxiomPreconditionFailed, InternalInconsistency
from .structures import GppeaModel, WppeaModel


@dataclass(frozen=True)
class Verdict:
    axiom: str
    passed: bool
    witness: tuple[int, ...] = ()

    def to_dict(self) -> dict:
        return {"axiom": self.axiom, "pass": self.passed, "witness": list(self.witness)}


@dataclass(frozen=True)
class CheckReport:
    kind: str
    verdicts: tuple[Verdict, ...]

    @property
    def overall(self) -> bool:
        return all(v.passed for v in self.verdicts)

    def __getitem__(self, axiom: str) -> Verdict:
        for v in self.verdicts:
            if v.axiom == axiom:
                return v
        raise KeyError(axiom)

    def __contains__(self, axiom: str) -> bool:
        return any(v.axiom == axiom for v in self.verdicts)

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if not v.passed]

    def to_dict(self) -> dict:
        return {"kind": self.kind, "overall": self.overall,
                "verdicts": [v.to_dict() for v in self.verdicts]}

    def render(self, names=None) -> str:
        lines = [f"{self.kind}: {'PASS' if self.overall else 'FAIL'}"]
        for v in self.verdicts:
            if v.passed:
                lines.append(f"  {v.axiom:<34} pass")
            else:
                w = ", ".join(names[x] if names else str(x) for x in v.witness)
                lines.append(f"  {v.axiom:<34} FAIL  witness ({w})")
        return "\n".join(lines)

    def merged(self, other: CheckReport, kind: str | None = None) -> CheckReport:
        return CheckReport(kind or self.kind, self.verdicts + other.verdicts)


# -- evaluation contexts ---------------------------------------------------


@dataclass
class _W:
    n: int
    p: tuple
    L: tuple
    R: tuple
    z: int
    u: int
    model: WppeaModel = field(repr=False)

    def le(self, a, b) -> bool:
        if a is None or b is None:
            return False
        return self.p[a][self.R[b]] is not None


@dataclass
class _G:
    n: int
    p: tuple
    rm: tuple
    lm: tuple
    z: int
    model: GppeaModel = field(repr=False)

    def le(self, a, b) -> bool:
        if a is None or b is None:
            return False
        return self.rm[b][a] is not None

    def leq_matrix(self) -> np.ndarray:
        n = self.n
        return np.array([[self.rm[b][a] is not None for b in range(n)] for a in range(n)], dtype=np.uint8)


def _ctx(model):
    if isinstance(model, WppeaModel):
        return _W(model.n, model.plus.cells, model.lsupp.image, model.rsupp.image,
                  model.zero, model.unit, model)
    if isinstance(model, GppeaModel):
        return _G(model.n, model.plus.cells, model.rminus.cells, model.lminus.cells,
                  model.zero, model)
    raise TypeError(f"not a model: {type(model).__name__}")


@dataclass(frozen=True)
class Law:
    name: str
    arity: int
    holds: Callable[..., bool]
    scan: Callable | None = None  # fast first-failure scan returning a tuple or None


def _scan(law: Law, ctx) -> Verdict:
    if law.scan is not None:
        w = law.scan(ctx)
        return Verdict(law.name, w is None, () if w is None else tuple(int(x) for x in w))
    for args in product(range(ctx.n), repeat=law.arity):
        if not law.holds(ctx, *args):
            return Verdict(law.name, False, args)
    return Verdict(law.name, True)


def _run(kind: str, laws: list[Law], model) -> CheckReport:
    ctx = _ctx(model)
    return CheckReport(kind, tuple(_scan(law, ctx) for law in laws))


def _plus_array(t) -> np.ndarray:
    return np.array([[-1 if v is None else v for v in row] for row in t], dtype=np.int32)


# -- WPPEA -----------------------------------------------------------------


def _w_order_ok(w: _W, a, b, c) -> bool:
    p, L, R = w.p, w.L, w.R
    if (p[a][R[b]] is None) != (p[L[b]][a] is None):
        return False
    le = w.le
    if not le(a, a):
        return False
    if a != b and le(a, b) and le(b, a):
        return False
    return not (le(a, b) and le(b, c) and not le(a, c))


WPPEA_LAWS = [
    Law("WPPEA1", 3, lambda w, a, b, c: kernels.assoc_ok(w.p, a, b, c),
        scan=lambda w: kernels.assoc_scan(_plus_array(w.p))),
    Law("WPPEA2", 1, lambda w, a: w.p[a][w.R[a]] == w.u and w.p[w.L[a]][a] == w.u),
    Law("WPPEA3", 3, _w_order_ok),
    Law("WPPEA4", 1, lambda w, a: (w.p[w.u][a] is None and w.p[a][w.u] is None) or a == w.z),
    Law("WPPEA5", 1, lambda w, a: (w.le(w.z, a) or w.le(a, w.z)) and (w.le(w.u, a) or w.le(a, w.u))),
]

WPPEA1_ALT = Law(
    "WPPEA1'", 3,
    lambda w, a, b, c: kernels.assoc_ok(w.p, a, b, c) and w.p[a][w.z] == a and w.p[w.z][a] == a,
)


def check_wppea(model: WppeaModel) -> CheckReport:
    """Verdicts for WPPEA1-5 plus the partial-monoid reformulation WPPEA1'.

    Whenever WPPEA2-4 hold, WPPEA1' must agree with WPPEA1 and WPPEA5 taken
    together; a disagreement raises :class:`InternalInconsistency`.
    """
    ctx = _ctx(model)
    verdicts = [_scan(law, ctx) for law in WPPEA_LAWS]
    alt = _scan(WPPEA1_ALT, ctx)
    by = {v.axiom: v.passed for v in verdicts}
    if by["WPPEA2"] and by["WPPEA3"] and by["WPPEA4"] and alt.passed != (by["WPPEA1"] and by["WPPEA5"]):
        raise InternalInconsistency(
            f"WPPEA1' gives {alt.passed} but WPPEA1 and WPPEA5 give {by['WPPEA1'] and by['WPPEA5']}")
    return CheckReport("wppea", tuple(verdicts) + (alt,))


def _pea_ok(c, a, b) -> bool:
    s = c.p[a][b]
    if s is None:
        return True
    n = c.n
    return any(c.p[e][a] == s for e in range(n)) and any(c.p[b][f] == s for f in range(n))


PEA_LAW = Law("PEA", 2, _pea_ok)
COMMUTATIVE_LAW = Law("commutative", 2, lambda c, a, b: c.p[a][b] == c.p[b][a])
CANCELLATIVE_LAWS = [
    Law("left-cancellative", 3,
        lambda c, a, b, x: c.p[a][b] is None or c.p[a][b] != c.p[a][x] or b == x),
    Law("right-cancellative", 3,
        lambda c, a, b, x: c.p[b][a] is None or c.p[b][a] != c.p[x][a] or b == x),
]


def check_pea(model: WppeaModel | GppeaModel) -> CheckReport:
    """The exchange condition: each defined ``a+b`` equals some ``e+a`` and some ``b+f``."""
    return _run("pea", [PEA_LAW], model)


def check_ppea(model: WppeaModel) -> CheckReport:
    return check_wppea(model).merged(check_pea(model), "ppea")


def check_commutative(model) -> CheckReport:
    return _run("commutative", [COMMUTATIVE_LAW], model)


def check_cancellative(model) -> CheckReport:
    return _run("cancellative", CANCELLATIVE_LAWS, model)


# -- GPPEA -----------------------------------------------------------------


def _g_order_ok(g: _G, a, b, c) -> bool:
    le = g.le
    if not le(a, a):
        return False
    if a != b and le(a, b) and le(b, a):
        return False
    return not (le(a, b) and le(b, c) and not le(a, c))


def _g_residuation_law(name: str, right: bool) -> Law:
    def holds(g: _G, a, b, c):
        m = g.rm if right else g.lm
        leq = [[g.le(x, y) for y in range(g.n)] for x in range(g.n)]
        return kernels.residuation_ok(g.p, m, leq, a, b, c, right)

    def scan(g: _G):
        m = g.rm if right else g.lm
        return kernels.residuation_scan(_plus_array(g.p), _plus_array(m), g.leq_matrix(), right)

    return Law(name, 3, holds, scan)


GPPEA_LAWS = [
    Law("GPPEA1", 1, lambda g, a: g.rm[a][a] == g.z and g.lm[a][a] == g.z),
    Law("GPPEA2-definedness", 2, lambda g, a, b: (g.rm[b][a] is None) == (g.lm[b][a] is None)),
    Law("GPPEA2", 3, _g_order_ok),
    _g_residuation_law("GPPEA3", right=True),
    _g_residuation_law("GPPEA4", right=False),
]


def check_gppea(model: GppeaModel, pea: bool = False) -> CheckReport:
    """Verdicts for GPPEA1-4.

    ``GPPEA2-definedness`` asks that ``b\\a`` and ``b/a`` be defined for the
    same pairs; ``GPPEA2`` asks that the relation read off ``\\`` be a
    partial order.  With ``pea=True`` the exchange condition for ``+`` is
    added as an extra verdict.
    """
    laws = GPPEA_LAWS + ([PEA_LAW] if pea else [])
    return _run("gppea", laws, model)


# -- derived properties ----------------------------------------------------


def _w_mono_right(w: _W, a, b, c) -> bool:
    if not (w.le(b, c) and w.p[a][c] is not None):
        return True
    return w.p[a][b] is not None and w.le(w.p[a][b], w.p[a][c])


def _w_mono_left(w: _W, a, b, c) -> bool:
    if not (w.le(b, c) and w.p[c][a] is not None):
        return True
    return w.p[b][a] is not None and w.le(w.p[b][a], w.p[c][a])


WPPEA_DERIVED = [
    Law("unit-supplements-are-zero", 0, lambda w: w.L[w.u] == w.z == w.R[w.u]),
    Law("supplements-injective", 2,
        lambda w, a, b: a == b or (w.R[a] != w.R[b] and w.L[a] != w.L[b])),
    Law("unit-is-top", 1, lambda w, a: w.le(a, w.u)),
    Law("zero-is-neutral", 1, lambda w, a: w.p[a][w.z] == a == w.p[w.z][a]),
    Law("zero-supplements-are-unit", 0, lambda w: w.L[w.z] == w.u == w.R[w.z]),
    Law("zero-is-bottom", 1, lambda w, a: w.le(w.z, a)),
    Law("triple-supplement", 1,
        lambda w, a: w.L[w.R[w.L[a]]] == w.L[a] and w.R[w.L[w.R[a]]] == w.R[a]),
    Law("supplements-inverse", 1, lambda w, a: w.L[w.R[a]] == a == w.R[w.L[a]]),
    Law("summands-below-sum", 2,
        lambda w, a, b: w.p[a][b] is None or (w.le(a, w.p[a][b]) and w.le(b, w.p[a][b]))),
    Law("sum-equals-left-summand", 2, lambda w, a, b: w.p[a][b] != a or b == w.z),
    Law("sum-equals-right-summand", 2, lambda w, a, b: w.p[a][b] != b or a == w.z),
    Law("positivity", 2, lambda w, a, b: w.p[a][b] != w.z or a == b == w.z),
    Law("supplements-antitone", 2,
        lambda w, a, b: w.le(a, b) == w.le(w.R[b], w.R[a]) == w.le(w.L[b], w.L[a])),
    Law("monotone-in-right-argument", 3, _w_mono_right),
    Law("monotone-in-left-argument", 3, _w_mono_left),
]


def _g_sum_bounds(g: _G, a, b) -> bool:
    s = g.p[a][b]
    if s is None:
        return True
    return (g.le(a, s) and g.le(b, s) and g.le(a, g.rm[s][b]) and g.le(b, g.lm[s][a]))


def _g_rminus_bounds(g: _G, a, b) -> bool:
    d = g.rm[a][b]
    if d is None:
        return True
    return g.le(d, a) and g.le(b, g.lm[a][d]) and g.le(g.p[d][b], a)


def _g_lminus_bounds(g: _G, a, b) -> bool:
    d = g.lm[a][b]
    if d is None:
        return True
    return g.le(d, a) and g.le(b, g.rm[a][d]) and g.le(g.p[b][d], a)


def _g_minus_monotone(g: _G, a, b, c) -> bool:
    if not (g.le(b, a) and g.le(c, b)):
        return True
    return g.le(g.rm[b][c], g.rm[a][c]) and g.le(g.lm[b][c], g.lm[a][c])


def _g_right_translation(g: _G, a, b, c) -> bool:
    if not (g.le(b, a) and g.p[a][c] is not None):
        return True
    ac, bc = g.p[a][c], g.p[b][c]
    if bc is None or not g.le(bc, ac):
        return False
    return g.le(g.rm[a][b], g.rm[ac][bc])


def _g_left_translation(g: _G, a, b, c) -> bool:
    if not (g.le(b, a) and g.p[c][a] is not None):
        return True
    ca, cb = g.p[c][a], g.p[c][b]
    if cb is None or not g.le(cb, ca):
        return False
    return g.le(g.lm[a][b], g.lm[ca][cb])


def _op(t, x, y):
    if x is None or y is None:
        return None
    return t[x][y]


def _g_difference_chain(g: _G, a, b, c) -> bool:
    if not (g.le(b, a) and g.le(c, b)):
        return True
    right = _op(g.p, g.rm[a][b], g.rm[b][c])
    left = _op(g.p, g.lm[b][c], g.lm[a][b])
    return g.le(right, g.rm[a][c]) and g.le(left, g.lm[a][c])


def _g_mixed_commute(g: _G, a, b, c) -> bool:
    return _op(g.lm, g.rm[b][a], c) == _op(g.rm, g.lm[b][c], a)


GPPEA_DERIVED = [
    Law("zero-is-neutral", 1, lambda g, a: g.p[a][g.z] == a == g.p[g.z][a]),
    Law("zero-is-bottom", 1, lambda g, a: g.le(g.z, a)),
    Law("minus-zero", 1, lambda g, a: g.rm[a][g.z] == a == g.lm[a][g.z]),
    Law("sum-bounds", 2, _g_sum_bounds),
    Law("rminus-bounds", 2, _g_rminus_bounds),
    Law("lminus-bounds", 2, _g_lminus_bounds),
    Law("sum-equals-summand", 2,
        lambda g, a, b: (g.p[a][b] != a or b == g.z) and (g.p[a][b] != b or a == g.z)),
    Law("positivity", 2, lambda g, a, b: g.p[a][b] != g.z or a == b == g.z),
    Law("minus-equals-self", 2,
        lambda g, a, b: (g.lm[a][b] == a) == (b == g.z) and (g.rm[a][b] == a) == (b == g.z)),
    Law("plus-associative", 3, lambda g, a, b, c: kernels.assoc_ok(g.p, a, b, c)),
    Law("minus-monotone", 3, _g_minus_monotone),
    Law("right-translation", 3, _g_right_translation),
    Law("left-translation", 3, _g_left_translation),
    Law("difference-chain", 3, _g_difference_chain),
    Law("mixed-differences-commute", 3, _g_mixed_commute),
]


def verify_derived_props(model: WppeaModel | GppeaModel) -> CheckReport:
    """Scan every consequence the axioms are known to force.

    On an axiom-conformant model all verdicts pass; a failure here means the
    checker and the theory disagree.
    """
    if isinstance(model, WppeaModel):
        base = check_wppea(model)
        laws, kind = WPPEA_DERIVED, "wppea-derived"
    else:
        base = check_gppea(model)
        laws, kind = GPPEA_DERIVED, "gppea-derived"
    if not base.overall:
        raise AxiomPreconditionFailed(f"model fails {base.kind} axioms", base)
    return _run(kind, laws, model)


# -- isolated re-evaluation ------------------------------------------------

_LAW_TABLES = {
    "wppea": WPPEA_LAWS + [WPPEA1_ALT],
    "ppea": WPPEA_LAWS + [WPPEA1_ALT, PEA_LAW],
    "pea": [PEA_LAW],
    "commutative": [COMMUTATIVE_LAW],
    "cancellative": CANCELLATIVE_LAWS,
    "gppea": GPPEA_LAWS + [PEA_LAW],
    "wppea-derived": WPPEA_DERIVED,
    "gppea-derived": GPPEA_DERIVED,
}


def evaluate(model, kind: str, axiom: str, args: tuple[int, ...]) -> bool:
    """Evaluate one axiom of a report kind at a single tuple."""
    for law in _LAW_TABLES[kind]:
        if law.name == axiom:
            if len(args) != law.arity:
                raise ValueError(f"{axiom} takes {law.arity} elements, got {len(args)}")
            return bool(law.holds(_ctx(model), *args))
    raise KeyError(axiom)
