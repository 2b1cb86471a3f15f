import pytest

from groebnercheck.groebner import buchberger
from groebnercheck.modular import BAD_REDUCTION, OK, default_primes, gb_mod_p, sample_structure, skeleton
from groebnercheck.parse import print_poly
from groebnercheck.poly import TermOrder, conjugate

from conftest import fixture


def test_gb_mod_p_examples(P, lex):
    assert [print_poly(g) for g in gb_mod_p([P("x + y"), P("x - y")], lex, 7)] == ["x", "y"]
    assert [print_poly(g) for g in gb_mod_p([P("x + y"), P("x - y")], lex, 2)] == ["x + y"]


def test_p1_branch_mod_32771_matches_rational():
    sf = fixture("phi11_zero/p1_branch.sys")
    F = [sf.poly("p1"), sf.poly("p3")]
    F += [conjugate(f) for f in F]
    order = TermOrder.make("grevlex", sf.table)
    assert skeleton(gb_mod_p(F, order, 32771)) == skeleton(buchberger(F, order))


def test_sample_structure_flags_unlucky_prime(P, lex):
    rep = sample_structure([P("x + y"), P("x - y")], lex, [2, 3, 5, 7, 11])
    assert rep.majority_skeleton == (((0, 1),), ((1, 0),))
    assert rep.dissenting == [2]
    assert rep.agreeing + len(rep.dissenting) + len(rep.failures) == len(rep.samples)


def test_single_prime_is_unanimous(P, lex):
    assert sample_structure([P("x^2 - y")], lex, [13]).unanimous


def test_bad_reduction_recorded(P, lex):
    rep = sample_structure([P("1/5*x + y")], lex, [5, 7])
    assert [s.status for s in rep.samples] == [BAD_REDUCTION, OK]
    assert rep.failures == [5] and not rep.unanimous


def test_final_system_unanimous_unit():
    sf = fixture("final_system.sys")
    rep = sample_structure(sf.generators(), TermOrder.make("grevlex", sf.table), default_primes(20))
    assert rep.unanimous
    assert rep.majority_skeleton == (((0,) * len(sf.table),),)


def test_parallel_matches_serial(P, lex):
    F = [P("x^2 - 3*y"), P("x*y - 5")]
    primes = default_primes(6)
    a = sample_structure(F, lex, primes)
    b = sample_structure(F, lex, primes, workers=3)
    assert a == b


def test_primes_must_be_distinct(P, lex):
    with pytest.raises(ValueError):
        sample_structure([P("x")], lex, [7, 7])
