import json

import pytest

from prepea.conjectures import conjecture_scan, count_completions
from prepea.enumeration import all_gppea
from prepea.errors import SizeLimitExceeded
from prepea.fixtures import fixture, fixture_model


def test_scan_records_are_machine_readable():
    r = conjecture_scan(4)
    d = json.loads(json.dumps(r.to_dict()))
    assert [x["id"] for x in d["records"]] == ["C1", "C2", "C3", "C4"]
    for rec in d["records"]:
        assert {"id", "statement", "max_n", "status", "models_scanned", "cases_scanned",
                "counterexamples"} <= set(rec)
        assert rec["models_scanned"] == 23


def test_c1_exhausted_at_5():
    r = conjecture_scan(5)
    assert r["C1"].status == "exhausted" and r["C1"].models_scanned == 196


def test_every_lminus_has_exactly_one_completion():
    for k in range(1, 5):
        for m in all_gppea(k):
            assert count_completions(m.lminus, m.zero) == 1
    for name in ("strict-gwppea-4", "ex-6-1", "ex-6-3-rip-not-rdp"):
        m = fixture_model(name)
        assert count_completions(m.lminus, m.zero) == 1


def test_tables_without_completion():
    assert count_completions(fixture("ex-4-2-lminus").tables["lminus"]) == 0
    assert count_completions(fixture_model("ex-4-3-triple").lminus) == 0


def test_c2_c3_case_counting_is_symmetric():
    # the scanned models are closed under transposition of + with swapped minus tables
    r = conjecture_scan(4)
    assert r["C2"].cases_scanned == r["C3"].cases_scanned


def test_size_limit():
    with pytest.raises(SizeLimitExceeded):
        conjecture_scan(7)


@pytest.mark.slow
def test_c1_exhausted_at_6():
    r = conjecture_scan(6)
    assert r["C1"].status == "exhausted" and r["C1"].models_scanned == 2895
    assert [r[k].status for k in ("C2", "C3", "C4")] == ["exhausted", "exhausted", "no-instance"]
