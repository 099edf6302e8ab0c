from itertools import product

import pytest

from prepea.enumeration import all_gppea
from prepea.fixtures import GPPEA_FIXTURES, fixture_model
from prepea.properties import (
    LMODRIP,
    LRMODRIP,
    MODIFIED,
    RDP,
    RIP,
    RMODRIP,
    check_all,
    check_modified_rip,
    check_rdp,
    check_rip,
    holds_at,
)

_MODELS = [m for k in range(1, 5) for m in all_gppea(k)] + [fixture_model(n) for n in GPPEA_FIXTURES]


def _op(t, x, y):
    return None if x is None or y is None else t.cells[x][y]


def _rdp_oracle(m):
    n, p = m.n, m.plus.cells
    bad = []
    for a1, a2, b1, b2 in product(range(n), repeat=4):
        if p[a1][a2] is None or p[a1][a2] != p[b1][b2]:
            continue
        if not any(p[c11][c12] == a1 and p[c21][c22] == a2 and p[c11][c21] == b1 and p[c12][c22] == b2
                   for c11, c12, c21, c22 in product(range(n), repeat=4)):
            bad.append((a1, a2, b1, b2))
    return bad


def _rip_like_oracle(m, prop):
    n, p, z = m.n, m.plus, m.zero
    le = m.le
    bad = []
    for a, b1, b2 in product(range(n), repeat=3):
        s = p(b1, b2)
        if s is None or not le(a, s):
            continue
        ok = False
        for a1, a2 in product(range(n), repeat=2):
            if not (le(a1, b1) and le(a2, b2)) or p(a1, a2) is None:
                continue
            if prop == RIP:
                ok = p(a1, a2) == a
            elif prop == LMODRIP:
                ok = _op(m.lminus, _op(m.lminus, a, a1), a2) == z and _op(m.lminus, a, p(a1, a2)) == z
            elif prop == RMODRIP:
                ok = _op(m.rminus, _op(m.rminus, a, a2), a1) == z and _op(m.rminus, a, p(a1, a2)) == z
            else:
                ok = _op(m.rminus, _op(m.lminus, a, a1), a2) == z
            if ok:
                break
        if not ok:
            bad.append((a, b1, b2))
    return bad


@pytest.mark.parametrize("idx", range(len(_MODELS)))
def test_scans_match_direct_definitions(idx):
    m = _MODELS[idx]
    assert check_rdp(m).counterexamples == tuple(_rdp_oracle(m))
    for prop in (RIP, *MODIFIED):
        v = check_rip(m) if prop == RIP else check_modified_rip(m, prop)
        assert v.counterexamples == tuple(_rip_like_oracle(m, prop))
        assert v.holds == (not v.counterexamples)
        assert v.witness == (v.counterexamples[0] if v.counterexamples else ())


def test_two_linear_examples():
    for name, w in (("ex-6-1", (1, 2, 2)), ("ex-6-2", (2, 1, 1))):
        v = {x.property: x for x in check_all(fixture_model(name))}
        assert v[RDP].holds and not v[RIP].holds and v[RIP].witness == w


def test_five_element_model():
    m = fixture_model("ex-6-3-rip-not-rdp")
    assert check_rip(m).holds and holds_at(m, RIP, (3, 2, 2)) and m.plus(1, 1) == 3
    rdp = check_rdp(m)
    assert not rdp.holds
    assert rdp.counterexamples == ((1, 2, 2, 2), (2, 1, 2, 2), (2, 2, 1, 2), (2, 2, 2, 1))


def test_one_plus_two_equals_two_plus_one_decomposes():
    m = fixture_model("ex-6-3-rip-not-rdp")
    p = m.plus
    assert p(1, 2) == p(2, 1) == 4
    c11, c12, c21, c22 = 0, 1, 2, 0
    assert (p(c11, c12), p(c21, c22), p(c11, c21), p(c12, c22)) == (1, 2, 2, 1)
    assert holds_at(m, RDP, (1, 2, 2, 1))


def test_seven_element_models_mirror():
    a = {v.property: v for v in check_all(fixture_model("ex-6-4-lmodrip"))}
    b = {v.property: v for v in check_all(fixture_model("ex-6-5-rmodrip"))}
    assert a[LMODRIP].holds and b[RMODRIP].holds
    assert a[RMODRIP].counterexamples == ((4, 1, 3),)
    assert b[LMODRIP].counterexamples == ((4, 3, 1),)
    assert a[LRMODRIP].counterexamples == ((4, 1, 3), (6, 1, 3))
    assert b[LRMODRIP].counterexamples == ((4, 3, 1), (6, 3, 1))
    for w in a[LRMODRIP].counterexamples:
        assert not holds_at(fixture_model("ex-6-4-lmodrip"), LRMODRIP, w)


def test_argument_checks():
    m = fixture_model("ex-6-1")
    with pytest.raises(ValueError):
        holds_at(m, RIP, (1, 2))
    with pytest.raises(ValueError):
        check_modified_rip(m, "XmodRIP")


def test_verdict_rendering():
    v = check_rip(fixture_model("ex-6-1"))
    assert v.render(fixture_model("ex-6-1").carrier.names) == "RIP: fails (1, 2, 2)"
    assert v.to_dict()["counterexamples"] == [[1, 2, 2]]
