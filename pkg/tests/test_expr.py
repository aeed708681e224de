"""Expression construction, calculus, evaluation and the exact helpers."""

from fractions import Fraction

import pytest

from expr.calculus import conjugate, derivative, differentiate, free_vars, is_real_expr, substitute
from expr.errors import DivisionByZero, EvaluationError, MissingAssignment, NotPolynomial
from expr.evaluate import Evaluator, Point, evaluate
from expr.jets import jet_agrees
from expr.linalg import determinant, inverse, matmul, nullspace, rank
from expr.nodes import ONE, ZERO, add, mul, neg, power, quotient, var
from expr.parser import parse_expr
from expr.polynomial import expand, polynomials_equal, to_polynomial
from expr.scalars import GaussianRational
from expr.variables import VARIABLES, Z1, Z2, ZB1, ZB2

z1, z2, zb1, zb2 = var(Z1), var(Z2), var(ZB1), var(ZB2)


def test_structurally_equal_trees_are_the_same_object():
    assert add(z1, z2) is add(z2, z1)
    assert mul(z1, zb1) is mul(zb1, z1)
    assert parse_expr("z1 + z2") is parse_expr("z2 + z1")


def test_normalization_cancels_and_folds():
    assert add(z1, neg(z1)) is ZERO
    assert mul(z1, power(z1, -1)) is ONE
    assert add(z1, z1) is mul(2, z1)
    assert neg(neg(z2)) is z2
    assert mul(0, z1) is ZERO


def test_conjugation_pairing_is_an_involution():
    for v in VARIABLES.values():
        assert v.partner.partner == v
        if v.real:
            assert v.partner == v


def test_wirtinger_derivatives_treat_conjugates_as_independent():
    e = mul(z1, z1, zb1)
    assert differentiate(e, "z1") is mul(2, z1, zb1)
    assert differentiate(e, "zb1") is mul(z1, z1)
    assert differentiate(e, "z2") is ZERO
    assert derivative(e, "z1", "zb1") is mul(2, z1)


def test_quotient_rule():
    e = quotient(z1, z2)
    assert differentiate(e, "z2") is neg(quotient(z1, mul(z2, z2)))


def test_conjugate_swaps_variables_and_constants():
    e = parse_expr("i*z1^2*zb2 + 3")
    assert conjugate(e) is parse_expr("-i*zb1^2*z2 + 3")
    assert conjugate(conjugate(e)) is e
    assert is_real_expr(parse_expr("z1*zb1 + z2*zb2"))
    assert not is_real_expr(parse_expr("i*z1*zb1"))


def test_substitute_and_free_vars():
    e = parse_expr("z1*zb1 + v")
    replaced = substitute(e, {"z1": z2, "v": 2})
    assert replaced is parse_expr("z2*zb1 + 2")
    assert free_vars(e) == frozenset({"z1", "zb1", "v"})


def test_point_fills_conjugates_and_rejects_inconsistency():
    p = Point({"z1": "1/2 + i", "v": 3})
    assert p["zb1"] == GaussianRational(Fraction(1, 2), -1)
    with pytest.raises(EvaluationError):
        Point({"z1": 1, "zb1": 2})
    with pytest.raises(EvaluationError):
        Point({"v": "i"})


def test_exact_evaluation():
    e = parse_expr("z1*zb1/(1 - z2*zb2)")
    value = evaluate(e, {"z1": "1 + i", "z2": "1/2"})
    assert value == GaussianRational(Fraction(8, 3))


def test_evaluation_reports_division_by_zero_and_missing_values():
    e = parse_expr("1/(1 - z2*zb2)")
    with pytest.raises(DivisionByZero):
        evaluate(e, {"z2": 1})
    with pytest.raises(MissingAssignment):
        evaluate(e, {"z1": 1})


def test_float_mode_agrees_with_exact_mode():
    e = parse_expr("(z1^3 - 2*i*zb1)/(z2 + 4)")
    point = Point({"z1": "1/3 - i", "z2": "2/7"})
    exact = Evaluator(point)(e)
    approx = Evaluator(point, "float")(e)
    assert abs(exact.to_mpc() - approx) < 1e-12


def test_polynomial_expansion():
    lhs = parse_expr("(z1 + zb1)^2")
    rhs = parse_expr("z1^2 + 2*z1*zb1 + zb1^2")
    assert polynomials_equal(lhs, rhs)
    assert expand(lhs) is expand(rhs)
    with pytest.raises(NotPolynomial):
        to_polynomial(parse_expr("1/z1"))


def test_exact_linear_algebra():
    a = [[GaussianRational(2), GaussianRational(0, 1)], [GaussianRational(1), GaussianRational(1)]]
    inv = inverse(a)
    assert matmul(a, inv) == [[GaussianRational(1), GaussianRational(0)], [GaussianRational(0), GaussianRational(1)]]
    assert determinant(a) == GaussianRational(2, -1)
    singular = [[GaussianRational(1), GaussianRational(2)], [GaussianRational(2), GaussianRational(4)]]
    assert inverse(singular) is None
    assert rank(singular) == 1
    assert len(nullspace(singular)) == 1


def test_symbolic_derivatives_match_finite_differences():
    e = parse_expr("z1^2*zb1/(2 + z2*zb2)")
    point = {
        "z1": GaussianRational(Fraction(1, 2)),
        "zb1": GaussianRational(Fraction(1, 3)),
        "z2": GaussianRational(Fraction(1, 5)),
        "zb2": GaussianRational(Fraction(2, 5)),
    }
    assert jet_agrees(e, point, {"z1": 1})
    assert jet_agrees(e, point, {"z1": 1, "zb2": 1})
    assert jet_agrees(e, point, {"zb1": 1, "z2": 2})
