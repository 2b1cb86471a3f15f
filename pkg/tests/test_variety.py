import pytest

from groebnercheck.errors import CapExceeded, TableMismatch
from groebnercheck.groebner import is_trivial, radical_member
from groebnercheck.modular import gb_mod_p
from groebnercheck.parse import parse_poly
from groebnercheck.poly import TermOrder, VariableTable, conjugate, eval_fp
from groebnercheck.variety import brute_force, variety_covered

from conftest import fixture

X = VariableTable(("x",))


def test_brute_force_examples():
    assert brute_force([parse_poly("x^2 - 1", X)], 5).points == [(1,), (4,)]
    assert brute_force([parse_poly("x^2 + 1", X)], 3).points == []


def test_cap():
    with pytest.raises(CapExceeded):
        brute_force([parse_poly("x", X)], 7, cap=5)


def test_coverage_examples():
    F = [parse_poly("x^2 - 1", X)]
    rep = variety_covered(F, [[parse_poly("x - 1", X)], [parse_poly("x + 1", X)]], 7)
    assert rep.covered and rep.sound
    rep = variety_covered(F, [], 7)
    assert not rep.covered and rep.missing == [(1,), (6,)]


def test_coverage_table_mismatch():
    with pytest.raises(TableMismatch):
        variety_covered([parse_poly("x", X)], [[parse_poly("u", VariableTable(("u",)))]], 5)


def test_partition_independent(P):
    F = [P("x^2 - y^3 + 1")]
    assert brute_force(F, 31).points == brute_force(F, 31, workers=3).points


def test_p1_branch_points_satisfy_radical_members():
    sf = fixture("phi11_zero/p1_branch.sys")
    F = [sf.poly("p1"), sf.poly("p3")]
    F += [conjugate(f) for f in F]
    V = brute_force(F, 7)
    # V(p1, p3, conj) is not empty mod 7: the literal system has solutions
    assert len(V) > 0
    p1 = sf.poly("p1")
    assert radical_member(p1 * p1, F)
    assert all(eval_fp(p1, pt, 7).value == 0 for pt in V.points)


@pytest.mark.parametrize("rel", ["d1_branch/d1_system.sys", "final_system.sys"])
@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_unit_systems_points_only_at_unlucky_primes(rel, p):
    # the rational basis is {1}; a prime may still divide the integer the
    # ideal contains; only then can the image have points mod p (points of an
    # unlucky image may still all lie outside Z_p itself)
    sf = fixture(rel)
    F = sf.generators()
    if rel.startswith("d1"):
        d1, E1 = sf.poly("d1"), sf.poly("E1")
        F = [d1, conjugate(d1), E1, conjugate(E1), sf.poly("E2"), sf.poly("E3")]
    order = TermOrder.make("grevlex", sf.table)
    lucky = is_trivial(gb_mod_p(F, order, p))
    points = brute_force(F, p).points
    if points:
        assert not lucky
    assert lucky == (p in (7, 13))
