from itertools import product

import pytest

from prepea.canon import is_isomorphic
from prepea.checks import check_gppea
from prepea.congruence import (
    Partition,
    check_congruence,
    check_quotient_lemmas,
    check_weak_congruence,
    enumerate_congruences,
    parse_partition,
    quotient,
    set_partitions,
)
from prepea.enumeration import all_gppea
from prepea.errors import InvalidPartition, NotWeakCongruence, PreconditionFailed
from prepea.fixtures import GPPEA_FIXTURES, fixture_model

CONGRUENCE_COUNTS = {"ex-4-3-triple": 3, "strict-gwppea-4": 2, "ex-6-1": 2, "ex-6-2": 2,
                     "ex-6-3-rip-not-rdp": 3, "ex-6-4-lmodrip": 2, "ex-6-5-rmodrip": 2}


def _is_congruence(m, part):
    """Direct reading of the definition: weak congruence, realization, both definedness clauses."""
    same = part.same
    n = m.n
    for t in (m.plus, m.lminus, m.rminus):
        c = t.cells
        for a1, b1, a2, b2 in product(range(n), repeat=4):
            if same(a1, a2) and same(b1, b2) and c[a1][b1] is not None and c[a2][b2] is not None:
                if not same(c[a1][b1], c[a2][b2]):
                    return False
        for A, B in product(part.blocks, repeat=2):
            vals = [c[x][y] for x in A for y in B if c[x][y] is not None]
            if not vals:
                continue
            target = [t_ for t_ in range(n) if same(t_, vals[0])]
            if set(target) - set(vals):
                return False
            if any(all(c[x][y] is None for y in B) for x in A):
                return False
            if any(all(c[x][y] is None for x in A) for y in B):
                return False
    return True


def test_bell_numbers():
    assert [len(list(set_partitions(n))) for n in range(1, 7)] == [1, 2, 5, 15, 52, 203]


def test_partition_parsing_and_validation():
    names = ("0", "a", "b", "1")
    p = parse_partition("0 | a b | 1", names)
    assert p.blocks == ((0,), (1, 2), (3,)) and p.render(names) == "0 | a b | 1"
    assert parse_partition("0,a | b,1", names).blocks == ((0, 1), (2, 3))
    with pytest.raises(InvalidPartition):
        parse_partition("0 | a | 1", names)
    with pytest.raises(InvalidPartition):
        parse_partition("0 a | a b 1", names)
    with pytest.raises(InvalidPartition):
        parse_partition("0 | x", names)


@pytest.mark.parametrize("name", GPPEA_FIXTURES)
def test_congruence_counts_and_trivial_partitions(name):
    m = fixture_model(name)
    parts = enumerate_congruences(m)
    assert len(parts) == CONGRUENCE_COUNTS[name]
    assert Partition.identity(m.n) in parts and Partition.single(m.n) in parts


def test_checker_matches_definition_on_small_models():
    for k in range(1, 5):
        for m in all_gppea(k):
            for part in set_partitions(k):
                weak = check_weak_congruence(m, part).holds
                full = weak and check_congruence(m, part).holds
                assert full == _is_congruence(m, part)


def test_quotient_by_identity_is_the_model():
    for name in GPPEA_FIXTURES[1:]:
        m = fixture_model(name)
        q, report = quotient(m, Partition.identity(m.n))
        assert report.overall and is_isomorphic(q, m)


def test_quotient_by_single_block_is_trivial():
    q, report = quotient(fixture_model("ex-6-3-rip-not-rdp"), Partition.single(5))
    assert q.n == 1 and report.overall


def test_nontrivial_quotient_of_five_element_model():
    m = fixture_model("ex-6-3-rip-not-rdp")
    part = parse_partition("0 | 1 2 | 3 4", m.carrier.names)
    q, report = quotient(m, part)
    assert report.overall and q.carrier.names == ("[0]", "[1]", "[3]")
    assert q.plus.cells == ((0, 1, 2), (1, 2, None), (2, None, None))


def test_quotient_lemmas_on_every_congruence():
    for k in range(1, 6):
        for m in all_gppea(k):
            for part in enumerate_congruences(m):
                q, report = quotient(m, part)
                assert all(v.holds for v in check_quotient_lemmas(q))
                assert report.overall == check_gppea(q).overall


def test_non_congruences_are_rejected():
    m = fixture_model("ex-6-3-rip-not-rdp")
    part = parse_partition("0 1 | 2 | 3 4", m.carrier.names)
    w = check_weak_congruence(m, part)
    assert not w.holds and w.witness[0] in ("+", "/", "\\")
    with pytest.raises(NotWeakCongruence):
        check_congruence(m, part)
    with pytest.raises(PreconditionFailed):
        quotient(m, part)
