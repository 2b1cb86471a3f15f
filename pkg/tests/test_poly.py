from fractions import Fraction

import pytest

from groebnercheck.errors import NonDivisible, NotBihomogeneous, TableMismatch, ZeroPolynomial
from groebnercheck.parse import parse_poly, print_poly
from groebnercheck.poly import (
    Polynomial,
    TermOrder,
    VariableTable,
    bidegree,
    conjugate,
    dehomogenize,
    eval_fp,
    exact_divide,
    leading_term,
    poly_arith,
    reduced_table,
    specialize,
    spin_table,
)

from conftest import fixture


def test_arith_difference_of_squares(P):
    assert poly_arith(P("x - y"), P("x + y"), "mul") == P("x^2 - y^2")


def test_add_zero_identity(P):
    f = P("3*x^2*y - 1/2*y + 7")
    assert poly_arith(f, Polynomial.zero(f.table), "add") == f


def test_table_mismatch(P):
    other = Polynomial.var(VariableTable(("u",)), "u")
    with pytest.raises(TableMismatch):
        poly_arith(P("x"), other, "add")


def test_storage_is_grevlex_descending(P):
    assert print_poly(P("1 + y + x + x*y + y^2 + x^2")) == "x^2 + x*y + y^2 + x + y + 1"


def test_leading_term_examples(P, xy):
    T = reduced_table()
    f = parse_poly("66*x1 + 125", T)
    assert leading_term(f, TermOrder.make("lex", T)) == (66, T.monomial(x1=1))
    g = P("x + y^2")
    assert leading_term(g, TermOrder.make("lex", xy)) == (1, (1, 0))
    assert leading_term(g, TermOrder.make("grlex", xy)) == (1, (0, 2))
    assert leading_term(P("5"), TermOrder.make("lex", xy)) == (5, (0, 0))
    with pytest.raises(ZeroPolynomial):
        leading_term(P("0"), TermOrder.make("lex", xy))


def test_priority_changes_lex_order(xy, P):
    o = TermOrder.make("lex", xy, ["y", "x"])
    assert leading_term(P("x + y"), o)[1] == (0, 1)


def test_conjugate_examples():
    T = reduced_table()
    assert conjugate(parse_poly("x1", T)) == parse_poly("xc1", T)
    f = parse_poly("192*x1*xc1 - 282*x1 - 505 + 280*xc1", T)
    assert conjugate(f) == parse_poly("192*x1*xc1 - 282*xc1 - 505 + 280*x1", T)
    assert conjugate(parse_poly("phi11*z", T)) == parse_poly("phi11*z", T)


def test_bidegree_examples():
    sf = fixture("spin/side_relations.sys")
    assert bidegree(sf.poly("p1")) == (1, 1)
    assert bidegree(sf.poly("p2")) == (2, 1)
    with pytest.raises(NotBihomogeneous) as exc:
        bidegree(parse_poly("a + b", spin_table()))
    assert exc.value.offending


def test_every_spin_fixture_is_bihomogeneous():
    sf = fixture("spin/side_relations.sys")
    for e in sf.entries:
        for f in e.polys:
            bidegree(f)


def test_dehomogenize_examples():
    sf = fixture("spin/side_relations.sys")
    T = reduced_table()
    assert dehomogenize(sf.poly("p1")) == parse_poly(
        "12*x2*xc2 + 6 + 2*x1 + 2*xc1 + 2*x1*xc1 + 5*xc1*xc2", T)
    assert dehomogenize(parse_poly("Phi11", spin_table())) == parse_poly("phi11", T)
    assert dehomogenize(sf.poly("d1")) == parse_poly("-xc2 + 12*x1 + 22", T)


def test_dehomogenize_matches_fixture_d1_reading():
    d1 = fixture("d1_branch/d1_system.sys").poly("d1")
    spin_d1 = fixture("spin/side_relations.sys").poly("d1")
    assert dehomogenize(spin_d1).retable(d1.table) == d1


def test_dehomogenize_rejects_mixed_bidegree():
    with pytest.raises(NotBihomogeneous):
        dehomogenize(parse_poly("a + b", spin_table()))


def test_specialize_examples(P):
    assert specialize(P("x^2 + y"), {"x": 0}) == P("y")
    f = P("x*y + 2")
    assert specialize(f, {}) is f
    assert specialize(P("x^2*y + x"), {"x": Fraction(1, 2)}) == P("1/4*y + 1/2")


def test_n1_specialization_divisible_by_bc():
    N1 = fixture("spin/side_relations.sys").poly("N1")
    n0 = specialize(N1, {"Phi11": 0})
    bc = Polynomial.var(N1.table, "bc")
    assert exact_divide(n0, bc) * bc == n0


def test_exact_divide_examples(P):
    assert exact_divide(P("x^2 - y^2"), P("x - y")) == P("x + y")
    with pytest.raises(NonDivisible):
        exact_divide(P("x^2 + 1"), P("x"))


def test_eval_fp_examples():
    t = VariableTable(("x",))
    assert eval_fp(parse_poly("x^2 - 1", t), [2], 5).value == 3
    T = VariableTable(("x1",))
    f = parse_poly("66*x1 + 125", T)
    root = (-125 * pow(66, -1, 7)) % 7
    assert eval_fp(f, [root], 7).value == 0
    g = parse_poly("3*x1^2 + 11", T)
    assert eval_fp(g, [0], 7).value == 11 % 7


def test_to_field_and_back():
    t = VariableTable(("x",))
    f = parse_poly("1/2*x + 3", t).to_field(5)
    assert f.modulus == 5 and f.as_dict() == {(1,): 3, (0,): 3}


def test_retable_by_name():
    T = reduced_table()
    f = parse_poly("x1*xc2 + 1", T)
    small = VariableTable(("xc2", "x1"))
    assert print_poly(f.retable(small)) == "xc2*x1 + 1"
