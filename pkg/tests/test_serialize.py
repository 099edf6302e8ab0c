import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from prepea.canon import canonical_form
from prepea.enumeration import all_gppea, all_wppea
from prepea.errors import ParseError
from prepea.fixtures import FIXTURES, fixture, names
from prepea.serialize import (
    Bundle,
    dumps_json,
    dumps_text,
    loads,
    loads_json,
    loads_text,
    to_json_dict,
)


def _same(a: Bundle, b: Bundle) -> bool:
    return (a.kind == b.kind and a.carrier == b.carrier and a.tables == b.tables
            and a.maps == b.maps and a.leq == b.leq)


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_fixture_round_trips(name):
    b = fixture(name)
    assert _same(loads_text(dumps_text(b)), b)
    assert _same(loads_json(dumps_json(b)), b)
    assert _same(loads(dumps_json(b)), loads(dumps_text(b)))


@pytest.mark.parametrize("name", sorted(FIXTURES))
def test_formats_canonicalize_identically(name):
    b = fixture(name)
    if b.kind == "tables":
        return
    m = b.to_model()
    via_text = loads_text(dumps_text(m)).to_model()
    via_json = loads_json(dumps_json(m)).to_model()
    assert canonical_form(via_text).encoding == canonical_form(via_json).encoding


def test_json_schema_fields():
    d = to_json_dict(fixture("strict-gwppea-4").to_model())
    assert d["kind"] == "gppea" and d["n"] == 4 and d["zero"] == 0 and d["unit"] is None
    assert d["plus"][1][1] is None and d["plus"][2][1] == 3
    w = to_json_dict(fixture("two-chain-wppea").to_model())
    assert w["lsupp"] == [1, 0] and w["rsupp"] == [1, 0]
    json.dumps(d)


_MODELS = [m for k in range(1, 5) for m in all_gppea(k)] + [m for k in range(2, 6) for m in all_wppea(k)]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(_MODELS))
def test_enumerated_models_round_trip(m):
    assert loads_text(dumps_text(m)).to_model() == m
    assert loads_json(dumps_json(m)).to_model() == m


@pytest.mark.parametrize("text", [
    "",
    "kind: nonsense\nelements: 0\nzero: 0\n",
    "kind: gppea\nelements: 0 a\nzero: 0\ntable +\n   0 a\n0  0 a\n",
    "kind: gppea\nelements: 0 a\nzero: 0\ntable +\n   0 a\n0  0 z\na  a .\n",
    '{"kind": "gppea", "n": 2}',
    "{not json",
    "kind: poset\nelements: 0 a\nzero: 0\nleq:\n  0: a\n  a: 0\n",
])
def test_malformed_inputs_raise_parse_error(text):
    with pytest.raises(ParseError):
        loads(text).to_model()


def test_fixture_names_are_listed():
    assert "strict-gwppea-4" in names()
    with pytest.raises(ParseError):
        fixture("missing")
