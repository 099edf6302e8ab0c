import os
import subprocess
import sys

import pytest

import oracles
from prepea.canon import canonical_form
from prepea.checks import check_gppea, check_wppea
from prepea.constructions import trivial_gppea_from_poset
from prepea.enumeration import (
    all_gppea,
    all_posets,
    all_wppea,
    anti_automorphisms,
    count_summary,
    enumerate_bounded_posets,
    enumerate_docposets,
    enumerate_gppea,
    enumerate_posets_with_bottom,
    enumerate_wppea,
)
from prepea.errors import SizeLimitExceeded
from prepea.fixtures import fixture_model
from prepea.structures import Poset, docposet_violation

# unlabelled posets on k points
POSETS = {1: 1, 2: 2, 3: 5, 4: 16, 5: 63, 6: 318}
BOUNDED = {2: 1, 3: 1, 4: 2, 5: 5, 6: 16, 7: 63, 8: 318}
WITH_BOTTOM = {1: 1, 2: 1, 3: 2, 4: 5, 5: 16, 6: 63}
WPPEA_PER_ORDER = {
    4: [2, 2],
    5: [3, 2, 0, 0, 3],
    6: [5, 4, 0, 0, 4, 0, 3, 3, 0, 7, 0, 0, 0, 6, 0, 7],
}
DOCPOSET_PER_ORDER_6 = [5, 2, 0, 0, 2, 0, 1, 1, 0, 2, 0, 0, 0, 2, 0, 1]
GPPEA_TOTALS = {1: 1, 2: 1, 3: 3, 4: 18, 5: 173}
GPPEA_PER_ORDER_4 = [1, 2, 5, 2, 8]


@pytest.mark.parametrize("k", sorted(POSETS))
def test_all_posets_counts(k):
    assert len(all_posets(k)) == POSETS[k]


@pytest.mark.parametrize("n", sorted(BOUNDED))
def test_bounded_poset_counts(n):
    assert len(enumerate_bounded_posets(n)) == BOUNDED[n]


@pytest.mark.parametrize("n", sorted(WITH_BOTTOM))
def test_posets_with_bottom_counts(n):
    assert len(enumerate_posets_with_bottom(n)) == WITH_BOTTOM[n]


def _classes(rels):
    return {canonical_form(Poset(tuple(map(tuple, r)))).encoding for r in rels}


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_bounded_posets_match_brute_force(n):
    got = {canonical_form(p).encoding for p in enumerate_bounded_posets(n)}
    assert got == _classes(oracles.brute_bounded_posets(n))


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_posets_with_bottom_match_brute_force(n):
    got = {canonical_form(p).encoding for p in enumerate_posets_with_bottom(n)}
    assert got == _classes(oracles.brute_posets_with_bottom(n))


def test_anti_automorphisms_of_square():
    po = fixture_model("square-poset")
    assert anti_automorphisms(po) == [(3, 1, 2, 0), (3, 2, 1, 0)]


@pytest.mark.parametrize("n", [4, 5, 6])
def test_wppea_counts_per_order(n):
    s = count_summary(n, with_gppea=False)
    assert [r.wppea for r in s.rows] == WPPEA_PER_ORDER[n]


def test_six_element_summary():
    s = count_summary(6, with_gppea=False)
    assert (s.bounded_posets, s.wppea_admissible, s.docposet_admissible, s.wppea_models) == (16, 8, 8, 39)
    assert [r.docposets for r in s.rows] == DOCPOSET_PER_ORDER_6
    assert [bool(r.wppea) for r in s.rows] == [bool(r.docposets) for r in s.rows]


@pytest.mark.parametrize("n", sorted(GPPEA_TOTALS))
def test_gppea_totals(n):
    assert len(all_gppea(n)) == GPPEA_TOTALS[n]


def test_gppea_per_order_4():
    assert [len(enumerate_gppea(p)) for p in enumerate_posets_with_bottom(4)] == GPPEA_PER_ORDER_4


@pytest.mark.slow
def test_gppea_total_6():
    assert len(all_gppea(6)) == 2699


def test_enumerated_models_are_valid_and_distinct():
    ws = [m for k in range(2, 7) for m in all_wppea(k)]
    assert all(check_wppea(m).overall for m in ws)
    gs = [m for k in range(1, 6) for m in all_gppea(k)]
    assert all(check_gppea(m).overall for m in gs)
    for group in (ws, gs):
        assert len({canonical_form(m).encoding for m in group}) == len(group)
    for p in enumerate_bounded_posets(6):
        for d in enumerate_docposets(p):
            assert docposet_violation(d.poset, d.lcompl, d.rcompl) is None


def test_square_contains_trivial_and_strict_models():
    po = fixture_model("square-poset")
    got = {canonical_form(m).encoding for m in enumerate_gppea(po)}
    assert canonical_form(trivial_gppea_from_poset(po)).encoding in got
    assert canonical_form(fixture_model("strict-gwppea-4")).encoding in got


@pytest.mark.parametrize("name", ["strict-gwppea-4", "ex-6-1", "ex-6-2", "ex-6-3-rip-not-rdp"])
def test_fixtures_are_rediscovered(name):
    m = fixture_model(name)
    found = enumerate_gppea(Poset(m.order_relation()))
    assert canonical_form(m).encoding in {canonical_form(x).encoding for x in found}


@pytest.mark.slow
def test_seven_element_fixture_is_rediscovered():
    m = fixture_model("ex-6-4-lmodrip")
    found = enumerate_gppea(Poset(m.order_relation()))
    assert len(found) == 326
    assert canonical_form(m).encoding in {canonical_form(x).encoding for x in found}


def test_size_limits():
    with pytest.raises(SizeLimitExceeded):
        enumerate_bounded_posets(9)
    chain = Poset(tuple(tuple(a <= b for b in range(8)) for a in range(8)))
    with pytest.raises(SizeLimitExceeded):
        enumerate_wppea(chain)
    with pytest.raises(SizeLimitExceeded):
        enumerate_gppea(chain)


def test_output_is_independent_of_worker_count():
    code = ("from prepea.enumeration import all_gppea; from prepea.canon import canonical_form; "
            "print([canonical_form(m).encoding.hex() for m in all_gppea(4)])")
    outs = []
    for w in ("1", "2"):
        env = {**os.environ, "PREPEA_WORKERS": w}
        outs.append(subprocess.run([sys.executable, "-c", code], env=env, capture_output=True,
                                   text=True, check=True).stdout)
    assert outs[0] == outs[1]


# -- z3 completeness oracles -------------------------------------------------

z3 = pytest.importorskip("z3")


def _enc(ms):
    return {canonical_form(m).encoding for m in ms}


@pytest.mark.parametrize("n", [3, 4])
def test_gppea_complete_against_z3(n):
    assert _enc(oracles.z3_gppea(n)) == _enc(all_gppea(n))


@pytest.mark.parametrize("n", [4, 5])
def test_wppea_complete_against_z3(n):
    assert _enc(oracles.z3_wppea(n)) == _enc(all_wppea(n))


@pytest.mark.slow
def test_wppea_six_complete_against_z3():
    found = _enc(oracles.z3_wppea(6))
    assert len(found) == 39 and found == _enc(all_wppea(6))
