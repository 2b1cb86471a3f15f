import pytest

from groebnercheck.errors import ResourceLimit, TableMismatch, ZeroPolynomial
from groebnercheck.groebner import (
    Limits,
    buchberger,
    is_trivial,
    normal_form,
    radical_member,
    s_polynomial,
    spolys_reduce_to_zero,
)
from groebnercheck.parse import print_poly
from groebnercheck.poly import Polynomial, TermOrder, VariableTable, conjugate

from conftest import fixture

ORDERS = ("lex", "grlex", "grevlex")


def test_normal_form_examples(P, lex):
    assert normal_form(P("x^2"), [P("x")], lex).is_zero()
    assert normal_form(P("x^2 + y"), [P("y - 1")], lex) == P("x^2 + 1")


def test_normal_form_table_mismatch(P, lex):
    other = Polynomial.var(VariableTable(("u",)), "u")
    with pytest.raises(TableMismatch):
        normal_form(P("x"), [other], lex)


def test_s_polynomial_examples(P, lex):
    assert s_polynomial(P("x + y"), P("x - y"), lex) == P("2*y")
    f = P("x^2*y + 3*x - 1")
    assert s_polynomial(f, f, lex).is_zero()
    s = s_polynomial(P("x^2"), P("y^2"), lex)
    assert normal_form(s, [P("x^2"), P("y^2")], lex).is_zero()
    with pytest.raises(ZeroPolynomial):
        s_polynomial(P("0"), P("x"), lex)


def test_buchberger_hand_example(P, lex):
    G = buchberger([P("x + y"), P("x - y")], lex)
    assert [print_poly(g) for g in G] == ["x", "y"]


def test_reduced_basis_is_monic_and_interreduced(P, xy):
    for kind in ORDERS:
        order = TermOrder.make(kind, xy)
        G = buchberger([P("x^2*y - 2"), P("x*y^2 - 3*x")], order)
        assert spolys_reduce_to_zero(G)
        lms = G.leading_monomials()
        for g in G:
            from groebnercheck.poly import leading_term
            assert leading_term(g, order)[0] == 1
        for i, a in enumerate(lms):
            for j, b in enumerate(lms):
                if i != j:
                    assert not all(u <= v for u, v in zip(a, b))


def test_is_trivial_examples(P, lex):
    assert is_trivial(buchberger([P("1")], lex))
    assert not is_trivial(buchberger([P("x")], lex))


def test_radical_member_examples(P, lex):
    assert radical_member(P("x"), [P("x^2")], lex)
    assert not radical_member(P("y"), [P("x")], lex)


def test_resource_limit_is_reported(P, lex):
    with pytest.raises(ResourceLimit):
        buchberger([P("x^3 - y^2"), P("x^2*y - x"), P("y^3 - 2*x")], lex, Limits(max_pairs=1))


def _d1_system():
    sf = fixture("d1_branch/d1_system.sys")
    d1, E1 = sf.poly("d1"), sf.poly("E1")
    return sf.table, [d1, conjugate(d1), E1, conjugate(E1), sf.poly("E2"), sf.poly("E3")]


@pytest.mark.parametrize("kind", ORDERS)
def test_d1_branch_is_unit_under_every_order(kind):
    T, F = _d1_system()
    assert is_trivial(buchberger(F, TermOrder.make(kind, T)))


def test_final_system_is_unit():
    sf = fixture("final_system.sys")
    G = buchberger(sf.generators(), TermOrder.make("grevlex", sf.table))
    assert [print_poly(g) for g in G] == ["1"]


def test_p2_vanishes_on_components():
    sf = fixture("phi11_zero/p2_components.sys")
    order = TermOrder.make("lex", sf.table)
    G1 = buchberger(sf["G1"].polys, order)
    assert normal_form(sf.poly("p2"), G1.generators, order).is_zero()
    assert radical_member(sf.poly("p2"), sf["G2"].polys, order)


def test_containment_on_fixture_systems():
    sf = fixture("phi11_zero/p1_branch.sys")
    F = [sf.poly("p1"), sf.poly("p3"), conjugate(sf.poly("p1")), conjugate(sf.poly("p3"))]
    for kind in ORDERS:
        order = TermOrder.make(kind, sf.table)
        G = buchberger(F, order)
        assert spolys_reduce_to_zero(G)
        assert all(normal_form(f, G.generators, order).is_zero() for f in F)


def test_determinism(P, xy):
    order = TermOrder.make("grevlex", xy)
    F = [P("x^3 - 2*x*y"), P("x^2*y - 2*y^2 + x")]
    a = [print_poly(g) for g in buchberger(F, order)]
    b = [print_poly(g) for g in buchberger(list(F), order)]
    assert a == b


def test_mod_p_basis(P, lex):
    G = buchberger([P("x + y").to_field(7), P("x - y").to_field(7)], lex)
    assert [print_poly(g) for g in G] == ["x", "y"]
    assert G.modulus == 7
