"""Acceptance criteria, one or more tests per criterion.

Each test records its outcome with ``accept`` so the terminal summary prints
one pass/fail line per criterion.  Tolerances: all comparisons are exact
(tables, witnesses, counts); runtime budgets are the wall-clock limits noted
on each test.  Criteria that the worked examples themselves contradict are
marked ``xfail(strict=True)``: the assertion is the criterion as written, so
the test turns red the moment it unexpectedly starts to hold.
"""

import json
import subprocess
import sys
import time

import pytest

from prepea.checks import check_commutative, check_pea, check_wppea, verify_derived_props
from prepea.congruence import Partition, check_congruence, check_quotient_lemmas, enumerate_congruences, quotient
from prepea.conjectures import conjecture_scan
from prepea.constructions import (
    docposet_reduct,
    restrict_wppea_to_gppea,
    unitize,
    wppea_from_docposet,
)
from prepea.derive import (
    RMINUS,
    derive_gppea_from_lminus,
    explicit_minus,
    minus_from_plus,
    plus_from_lminus,
)
from prepea.enumeration import all_gppea, all_wppea, enumerate_bounded_posets, enumerate_docposets
from prepea.errors import FormulaUndefined, NoSupremum
from prepea.fixtures import GPPEA_FIXTURES, fixture, fixture_model
from prepea.properties import LMODRIP, LRMODRIP, RDP, RIP, RMODRIP, check_all, holds_at
from prepea.structures import Poset

POSETS_BUDGET_S = 10.0
WPPEA_BUDGET_S = 300.0
ROUND_TRIP_BUDGET_S = 600.0
UNITIZE_BUDGET_S = 300.0
VERIFY_BUDGET_S = 900.0


def _cli(*args, timeout):
    t = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "prepea", *args], capture_output=True,
                          text=True, timeout=timeout)
    return proc, time.perf_counter() - t


# 1 -------------------------------------------------------------------------

def test_criterion_1_sixteen_bounded_orders(accept):
    proc, dt = _cli("enumerate", "--n", "6", "--kind", "posets", "--count-only", timeout=60)
    ok = proc.returncode == 0 and proc.stdout.strip() == "16" and dt < POSETS_BUDGET_S
    accept(1, "enumerate --n 6 --kind posets --count-only prints 16 in < 10 s", ok,
           f"output {proc.stdout.strip()!r}, {dt:.2f} s")
    assert ok


# 2 -------------------------------------------------------------------------

def test_criterion_2_eight_admissible_orders(accept):
    proc, dt = _cli("enumerate", "--n", "6", "--kind", "wppea", timeout=2 * WPPEA_BUDGET_S)
    line = [x for x in proc.stdout.splitlines() if x.startswith("admissible orders:")]
    ok = proc.returncode == 0 and line == ["admissible orders: 8"] and dt < WPPEA_BUDGET_S
    accept(2, "enumerate --n 6 --kind wppea reports 8 admissible orders in < 5 min", ok,
           f"{line}, {dt:.2f} s")
    assert ok


# 3 -------------------------------------------------------------------------

def test_criterion_3_square_sum_table(accept):
    out = plus_from_lminus(fixture("ex-4-1-lminus").tables["lminus"])
    want = fixture("ex-4-1-plus").tables["plus"]
    ok = out.ok and out.result[1] == want
    accept(3, "square left minus gives the printed + table", ok)
    assert ok


def test_criterion_3_follow_on_failure(accept):
    b = fixture("ex-4-1-plus")
    out = minus_from_plus(b.tables["plus"], b.leq)
    fails = [f for f in out.failures if f.op == RMINUS]
    # (1, a) is (3, 1); the printed set {a, b} is the competing maximal pair
    ok = len(fails) >= 1 and fails[0].pair == (3, 1) and fails[0].competitors == (1, 2)
    accept(3, "follow-on right minus fails at (1, a) with {a, b}", ok,
           fails[0].describe(b.carrier.names) if fails else "no failure")
    assert ok


def test_criterion_3_no_infimum(accept):
    b = fixture("ex-4-2-lminus")
    out = plus_from_lminus(b.tables["lminus"])
    ok = len(out.failures) >= 1 and out.failures[0].pair == (2, 1) and out.failures[0].members == (3, 4)
    accept(3, "five-element left minus fails at P^l_{b,a} = {c, d}", ok,
           out.failures[0].describe(b.carrier.names) if out.failures else "no failure")
    assert ok


def test_criterion_3_triple_pipeline(accept):
    m = fixture_model("ex-4-3-triple")
    model, report = derive_gppea_from_lminus(m.lminus)
    v = report["GPPEA3"]
    ok = (not v.passed and v.witness == (1, 1, 1) and model.plus(1, 1) == 1
          and model.plus == m.plus and model.rminus == m.rminus)
    accept(3, "triple pipeline fails GPPEA3 at (a, a, a) with a+a = a", ok, f"witness {v.witness}")
    assert ok


# 4 -------------------------------------------------------------------------

@pytest.mark.slow
def test_criterion_4_round_trips(accept):
    t = time.perf_counter()
    bad, total = [], 0
    for k in range(1, 6):
        for m in all_gppea(k):
            total += 1
            order = Poset(m.order_relation())
            out = minus_from_plus(m.plus, order, zero=m.zero)
            if not out.ok or out.result != (m.rminus, m.lminus):
                bad.append(("minus", k, m))
            back = plus_from_lminus(m.lminus)
            if not back.ok or back.result[1] != m.plus or back.result[0].leq != order.leq:
                bad.append(("plus", k, m))
    dt = time.perf_counter() - t
    ok = not bad and dt < ROUND_TRIP_BUDGET_S
    accept(4, "round trips over every generalized model with n <= 5", ok,
           f"{total} models, {len(bad)} mismatches, {dt:.1f} s")
    assert ok


# 5 -------------------------------------------------------------------------

def _v(name):
    return {v.property: v for v in check_all(fixture_model(name))}


def test_criterion_5_linear_examples(accept):
    v1, v2 = _v("ex-6-1"), _v("ex-6-2")
    ok = (v1[RDP].holds and not v1[RIP].holds and v1[RIP].witness == (1, 2, 2)
          and v2[RDP].holds and not v2[RIP].holds and v2[RIP].witness == (2, 1, 1))
    accept(5, "2+2 = 3 and linear models: RDP holds, RIP fails at (1,2,2) and (2,1,1)", ok,
           f"{v1[RIP].witness}, {v2[RIP].witness}")
    assert ok


def test_criterion_5_rip_holds(accept):
    v = _v("ex-6-3-rip-not-rdp")
    ok = v[RIP].holds and not v[RDP].holds
    accept(5, "five-element model: RIP holds, RDP fails", ok)
    assert ok


@pytest.mark.xfail(strict=True, reason="1+2 = 2+1 decomposes via c = [[0,1],[2,0]]; see decisions ledger")
def test_criterion_5_rdp_witness(accept):
    m = fixture_model("ex-6-3-rip-not-rdp")
    ok = not holds_at(m, RDP, (1, 2, 2, 1))
    accept(5, "five-element model: RDP fails at 1+2 = 2+1 (exact witness)", ok,
           f"first failure is {_v('ex-6-3-rip-not-rdp')[RDP].witness}")
    assert ok


def test_criterion_5_modified(accept):
    a, b = _v("ex-6-4-lmodrip"), _v("ex-6-5-rmodrip")
    ok = (a[LMODRIP].holds and a[RMODRIP].witness == (4, 1, 3) and (6, 1, 3) in a[LRMODRIP].counterexamples
          and b[RMODRIP].holds and b[LMODRIP].witness == (4, 3, 1)
          and (6, 3, 1) in b[LRMODRIP].counterexamples)
    accept(5, "seven-element models: modified RIP verdicts and witnesses, mirrored", ok,
           f"LRmodRIP failures {a[LRMODRIP].counterexamples} / {b[LRMODRIP].counterexamples}")
    assert ok


# 6 -------------------------------------------------------------------------

@pytest.mark.xfail(strict=True, reason="unitization breaks WPPEA3 when + is not symmetric in definedness; "
                                       "see decisions ledger")
def test_criterion_6_unitization(accept):
    t = time.perf_counter()
    models = [m for k in range(1, 5) for m in all_gppea(k)]
    failing = [m for m in models if not check_wppea(unitize(m)).overall]
    dt = time.perf_counter() - t
    ok = not failing and dt < UNITIZE_BUDGET_S
    accept(6, "unitization of every generalized model with n <= 4 passes the axioms", ok,
           f"{len(failing)} of {len(models)} fail, {dt:.1f} s")
    assert ok


# 7 -------------------------------------------------------------------------

@pytest.mark.slow
def test_criterion_7_property_suites(accept):
    models = [m for k in range(2, 7) for m in all_wppea(k)]
    derived = all(verify_derived_props(m).overall for m in models)
    comm = [m for m in models if check_commutative(m).overall]
    pea = all(check_pea(m).overall for m in comm)
    docs = [d for k in range(2, 7) for p in enumerate_bounded_posets(k) for d in enumerate_docposets(p)]
    rt = all(
        (r.poset.leq, r.lcompl, r.rcompl) == (d.poset.leq, d.lcompl, d.rcompl)
        for d in docs for r in [docposet_reduct(wppea_from_docposet(d))]
    )
    agree = tried = 0
    for m in models:
        try:
            g = restrict_wppea_to_gppea(m)
            rm, lm = explicit_minus(m)
        except (NoSupremum, FormulaUndefined):
            continue
        tried += 1
        agree += (g.rminus, g.lminus) == (rm, lm)
    ok = derived and pea and rt and agree == tried > 0
    accept(7, "derived properties, commutative => (PEA), docposet round trip, restriction = formulas", ok,
           f"{len(models)} models, {len(comm)} commutative, {len(docs)} docposets, {agree}/{tried} restrictions")
    assert ok


# 8 -------------------------------------------------------------------------

def test_criterion_8_congruences(accept):
    bad = []
    count = 0
    for name in GPPEA_FIXTURES:
        m = fixture_model(name)
        for part in (Partition.identity(m.n), Partition.single(m.n)):
            if not check_congruence(m, part).holds:
                bad.append((name, part.blocks))
        for part in enumerate_congruences(m):
            count += 1
            q, _ = quotient(m, part)
            if not all(v.holds for v in check_quotient_lemmas(q)):
                bad.append((name, part.blocks))
    ok = not bad
    accept(8, "trivial partitions are congruences; quotients satisfy both lemmas", ok,
           f"{count} quotients over {len(GPPEA_FIXTURES)} fixtures")
    assert ok


# 9 -------------------------------------------------------------------------

def test_criterion_9_conjectures(accept):
    report = conjecture_scan(5)
    data = json.loads(json.dumps(report.to_dict()))
    ids = [r["id"] for r in data["records"]]
    ok = report["C1"].status == "exhausted" and ids == ["C1", "C2", "C3", "C4"]
    accept(9, "C1 finds nothing at n <= 5; C2-C4 emitted as records", ok,
           ", ".join(f"{r['id']}={r['status']}" for r in data["records"]))
    assert ok


# 10 ------------------------------------------------------------------------

@pytest.mark.xfail(strict=True, reason="one replay (RDP witness 1+2 = 2+1) contradicts its own example; "
                                       "see decisions ledger")
def test_criterion_10_verify_paper(accept):
    proc, dt = _cli("verify-paper", timeout=2 * VERIFY_BUDGET_S)
    failed = [x for x in proc.stdout.splitlines() if x.startswith("FAIL")]
    ok = proc.returncode == 0 and dt < VERIFY_BUDGET_S
    accept(10, "verify-paper exits 0 in < 15 min", ok,
           f"exit {proc.returncode}, {dt:.1f} s, {proc.stdout.strip().splitlines()[-1]}; "
           + "; ".join(failed))
    assert ok
