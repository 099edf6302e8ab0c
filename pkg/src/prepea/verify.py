"""Replay of the worked examples shipped as fixtures.

Every entry recomputes a verdict, table, witness or count from scratch and
compares it with the documented value.  :func:`replay_all` returns one
:class:`Replay` per example; the command line exits non-zero if any differs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .canon import canonical_form
from .checks import check_commutative, check_gppea, check_pea, check_wppea
from .congruence import Partition, check_congruence, check_quotient_lemmas, enumerate_congruences, quotient
from .conjectures import conjecture_scan
from .constructions import (
    restrict_wppea_to_gppea,
    trivial_gppea_from_poset,
    unitize,
    wppea_from_docposet,
)
from .derive import (
    RMINUS,
    derive_gppea_from_lminus,
    explicit_minus,
    minus_from_plus,
    order_from_minus,
    plus_candidates,
    plus_from_lminus,
    plus_from_rminus,
)
from .enumeration import all_wppea, count_summary, enumerate_bounded_posets
from .errors import FormulaUndefined, NoSupremum
from .fixtures import GPPEA_FIXTURES, fixture, fixture_model
from .orders import derived_order, sq_orders
from .properties import LMODRIP, LRMODRIP, RDP, RIP, RMODRIP, check_all, holds_at
from .structures import validate_poset


@dataclass
class Replay:
    name: str
    ok: bool
    expected: str
    got: str
    seconds: float = 0.0

    def render(self) -> str:
        mark = "ok  " if self.ok else "FAIL"
        line = f"{mark} {self.name} ({self.seconds:.2f}s)"
        if not self.ok:
            line += f"\n     expected: {self.expected}\n     got:      {self.got}"
        return line

    def to_dict(self) -> dict:
        return {"name": self.name, "ok": self.ok, "expected": self.expected,
                "got": self.got, "seconds": round(self.seconds, 3)}


REPLAYS = []


def replay(name):
    def wrap(fn):
        REPLAYS.append((name, fn))
        return fn
    return wrap


def _rows(table) -> str:
    return str([list(r) for r in table.cells])


# -- orders and bounded structures -------------------------------------------

@replay("square order is a valid poset with a, b incomparable")
def _square():
    po = fixture_model("square-poset")
    validate_poset(po.leq)
    return (not po.comparable(1, 2)), "valid, a || b", f"valid, a || b = {not po.comparable(1, 2)}"


@replay("16 bounded 6-element orders, pairwise non-isomorphic")
def _sixteen():
    ps = enumerate_bounded_posets(6)
    enc = {canonical_form(p).encoding for p in ps}
    return len(ps) == 16 == len(enc), "16 orders, 16 encodings", f"{len(ps)} orders, {len(enc)} encodings"


@replay("square docposet model recovers the square order")
def _doc_square():
    m = wppea_from_docposet(fixture_model("square-docposet"))
    got = derived_order(m).leq
    want = fixture_model("square-poset").leq
    return got == want and check_wppea(m).overall, "square order, all axioms", f"order equal: {got == want}"


@replay("two-chain: 1^L = 0 = 1^R and 0^L = 1 = 0^R")
def _two_chain():
    m = fixture_model("two-chain-wppea")
    got = (m.lsupp(1), m.rsupp(1), m.lsupp(0), m.rsupp(0))
    return got == (0, 0, 1, 1), "(0, 0, 1, 1)", str(got)


@replay("6 elements: 8 orders admit a model, the same 8 admit a docposet")
def _eight():
    s = count_summary(6, with_gppea=False)
    w = [r.index for r in s.rows if r.wppea]
    d = [r.index for r in s.rows if r.docposets]
    return len(w) == 8 and w == d, "8 admissible, sets equal", f"wppea {w}, docposet {d}"


@replay("every (PEA) model up to 6 elements has equal summand orders")
def _pea_orders():
    bad = [m for k in range(2, 7) for m in all_wppea(k)
           if check_pea(m).overall and not sq_orders(m).coincide]
    return not bad, "no exception", f"{len(bad)} exceptions"


@replay("every commutative model up to 6 elements satisfies (PEA)")
def _commutative():
    bad = [m for k in range(2, 7) for m in all_wppea(k)
           if check_commutative(m).overall and not check_pea(m).overall]
    return not bad, "no exception", f"{len(bad)} exceptions"


# -- generalized axioms ------------------------------------------------------

@replay("smallest strict generalized model passes all axioms")
def _strict():
    r = check_gppea(fixture_model("strict-gwppea-4"))
    return r.overall, "pass", "pass" if r.overall else str(r.failures())


@replay("left-minus triple fails GPPEA3 where a+a = a")
def _triple():
    m = fixture_model("ex-4-3-triple")
    r = check_gppea(m)
    w = r["GPPEA3"].witness
    ok = not r["GPPEA3"].passed and w == (1, 1, 1) and m.plus(1, 1) == 1
    return ok, "GPPEA3 fails at (a, a, a), a+a = a", f"GPPEA3 passed={r['GPPEA3'].passed} witness={w}"


@replay("square poset: trivial model is valid with x/y = x\\y = 0 for 0 < y <= x")
def _trivial():
    po = fixture_model("square-poset")
    m = trivial_gppea_from_poset(po)
    zeros = all(m.lminus(x, y) == m.rminus(x, y) == 0
                for x in range(4) for y in range(1, 4) if po.le(y, x))
    ok = check_gppea(m).overall and zeros
    return ok, "valid, zero differences", f"valid={check_gppea(m).overall} zeros={zeros}"


@replay("unitizing the trivial model on {0, a, b} gives a +_p a* = 0*")
def _unit_trivial():
    from .structures import Poset
    po = Poset.from_covers(3, [(0, 1), (0, 2)])
    u = unitize(trivial_gppea_from_poset(po))
    ok = check_wppea(u).overall and u.rsupp(1) == 4 and u.plus(1, 4) == 3
    return ok, "6 elements, a^R = a*, a + a* = 0*", f"n={u.n} a^R={u.rsupp(1)} a+a*={u.plus(1, 4)}"


# -- derivations -------------------------------------------------------------

@replay("square left minus yields the printed sum table")
def _d41():
    lm = fixture("ex-4-1-lminus").tables["lminus"]
    out = plus_from_lminus(lm)
    want = fixture("ex-4-1-plus").tables["plus"]
    po = out.result[0]
    sets = (plus_candidates(lm, po, 0, 0, True), plus_candidates(lm, po, 0, 1, True),
            plus_candidates(lm, po, 0, 3, True))
    ok = out.ok and out.result[1] == want and sets == ((0, 1, 2, 3), (1, 3), (3,))
    return ok, f"{_rows(want)}; P^l sets (0,a,b,1) (a,1) (1)", f"{_rows(out.result[1])}; {sets}"


@replay("sum of the square example: R_{1,a} = {a, b} has no supremum")
def _d41_back():
    b = fixture("ex-4-1-plus")
    out = minus_from_plus(b.tables["plus"], b.leq)
    f = [x for x in out.failures if x.pair == (3, 1) and x.op == RMINUS]
    got = f[0].competitors if f else None
    return got == (1, 2), "failure at (1, a), competing {a, b}", f"{got}"


@replay("five-element left minus: P^l_{b,a} = {c, d} has no infimum")
def _d42():
    out = plus_from_lminus(fixture("ex-4-2-lminus").tables["lminus"])
    f = [x for x in out.failures if x.pair == (2, 1)]
    got = f[0].members if f else None
    return got == (3, 4), "(3, 4)", str(got)


@replay("triple: its right minus reproduces its sum")
def _d43_plus():
    m = fixture_model("ex-4-3-triple")
    out = plus_from_rminus(m.rminus)
    return out.ok and out.result[1] == m.plus, _rows(m.plus), _rows(out.result[1])


@replay("triple: the left minus pipeline fails GPPEA3")
def _d43_pipe():
    m = fixture_model("ex-4-3-triple")
    model, report = derive_gppea_from_lminus(m.lminus)
    ok = (model.plus == m.plus and model.rminus == m.rminus and not report["GPPEA3"].passed)
    return ok, "printed + and \\, GPPEA3 fails", f"GPPEA3 passed={report['GPPEA3'].passed}"


@replay("linear model: both derived minus tables equal the printed one")
def _d62():
    m = fixture_model("ex-6-2")
    out = minus_from_plus(m.plus, order_from_minus(m.lminus))
    rm, lm = out.result
    return out.ok and rm == m.rminus and lm == m.lminus, _rows(m.lminus), f"{_rows(rm)} / {_rows(lm)}"


@replay("restriction agrees with the supplement formulas up to 6 elements")
def _restrict():
    agree = tried = 0
    for k in range(2, 7):
        for m in all_wppea(k):
            try:
                g = restrict_wppea_to_gppea(m)
                rm, lm = explicit_minus(m)
            except (NoSupremum, FormulaUndefined):
                continue
            tried += 1
            agree += g.rminus == rm and g.lminus == lm
    return agree == tried > 0, "all successes agree", f"{agree}/{tried}"


# -- decomposition properties ------------------------------------------------

def _verdicts(name):
    return {v.property: v for v in check_all(fixture_model(name))}


@replay("2+2 = 3 model: RDP holds, RIP fails at 1 <= 2+2")
def _p61():
    v = _verdicts("ex-6-1")
    ok = v[RDP].holds and not v[RIP].holds and v[RIP].witness == (1, 2, 2)
    return ok, "RDP holds, RIP fails (1, 2, 2)", f"RDP {v[RDP].holds}, RIP {v[RIP].witness}"


@replay("linear model: RDP holds, RIP fails at 2 <= 1+1")
def _p62():
    v = _verdicts("ex-6-2")
    ok = v[RDP].holds and not v[RIP].holds and v[RIP].witness == (2, 1, 1)
    return ok, "RDP holds, RIP fails (2, 1, 1)", f"RDP {v[RDP].holds}, RIP {v[RIP].witness}"


@replay("five-element model: RIP holds via 3 = 1+1 for 3 <= 2+2")
def _p63_rip():
    m = fixture_model("ex-6-3-rip-not-rdp")
    v = _verdicts("ex-6-3-rip-not-rdp")
    ok = v[RIP].holds and m.plus(1, 1) == 3 and holds_at(m, RIP, (3, 2, 2))
    return ok, "RIP holds, 1+1 = 3", f"RIP {v[RIP].holds}, 1+1 = {m.plus(1, 1)}"


@replay("five-element model: RDP fails at 1+2 = 2+1")
def _p63_rdp():
    m = fixture_model("ex-6-3-rip-not-rdp")
    v = _verdicts("ex-6-3-rip-not-rdp")
    at = holds_at(m, RDP, (1, 2, 2, 1))
    ok = not v[RDP].holds and not at
    return (ok, "RDP fails, no decomposition of 1+2 = 2+1",
            f"RDP fails={not v[RDP].holds}, 1+2 = 2+1 decomposes={at}, first failure {v[RDP].witness}")


@replay("seven-element model: LmodRIP holds, RmodRIP fails (4,1,3), LRmodRIP fails (6,1,3)")
def _p64():
    v = _verdicts("ex-6-4-lmodrip")
    ok = (v[LMODRIP].holds and v[RMODRIP].witness == (4, 1, 3)
          and (6, 1, 3) in v[LRMODRIP].counterexamples)
    return ok, "holds; (4,1,3); (6,1,3) among failures", (
        f"{v[LMODRIP].holds}; {v[RMODRIP].witness}; {v[LRMODRIP].counterexamples}")


@replay("transposed seven-element model mirrors the witnesses")
def _p65():
    v = _verdicts("ex-6-5-rmodrip")
    ok = (v[RMODRIP].holds and v[LMODRIP].witness == (4, 3, 1)
          and (6, 3, 1) in v[LRMODRIP].counterexamples)
    return ok, "holds; (4,3,1); (6,3,1) among failures", (
        f"{v[RMODRIP].holds}; {v[LMODRIP].witness}; {v[LRMODRIP].counterexamples}")


# -- congruences -------------------------------------------------------------

@replay("fixtures: trivial partitions are congruences; every quotient obeys both lemmas")
def _quotients():
    bad = []
    for name in GPPEA_FIXTURES:
        m = fixture_model(name)
        for part in (Partition.identity(m.n), Partition.single(m.n)):
            if not check_congruence(m, part).holds:
                bad.append((name, part.render()))
        for part in enumerate_congruences(m):
            q, _ = quotient(m, part)
            if not all(v.holds for v in check_quotient_lemmas(q)):
                bad.append((name, part.render()))
    return not bad, "no exception", str(bad)


@replay("no left minus up to 5 elements has two completions")
def _c1():
    rec = conjecture_scan(5)["C1"]
    return rec.status == "exhausted", "exhausted", f"{rec.status} ({len(rec.counterexamples)})"


def replay_all(names=None) -> list[Replay]:
    out = []
    for name, fn in REPLAYS:
        if names is not None and name not in names:
            continue
        t = time.perf_counter()
        ok, expected, got = fn()
        out.append(Replay(name, bool(ok), expected, got, time.perf_counter() - t))
    return out

