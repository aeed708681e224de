"""Vector fields, frames and two-form tables."""

import pytest

from expr.errors import SingularFrame
from expr.nodes import ONE, var
from expr.parser import parse_expr
from expr.polynomial import polynomials_equal
from expr.sampling import zero_test_many
from expr.variables import Z1
from fields.forms import TwoFormTable
from fields.frames import Frame, OneForm, expand_in_frame
from fields.vector_field import VectorField, combination
from hypersurface.checks import check_duality
from hypersurface.frames import COFRAME_NAMES, coframe, frame

z1 = var(Z1)


def _field(**coefficients: str) -> VectorField:
    return VectorField({x: parse_expr(c) for x, c in coefficients.items()})


def _same(a: VectorField, b: VectorField) -> bool:
    names = set(a.variables()) | set(b.variables())
    return all(polynomials_equal(a[x], b[x]) for x in names)


def test_bracket_of_coordinate_fields():
    X = VectorField.partial("z1")
    Y = _field(z2="z1")
    assert X.bracket(Y).to_dict() == {"z2": "1"}
    assert Y.bracket(X).to_dict() == {"z2": "-1"}


def test_bracket_is_antisymmetric_and_satisfies_jacobi():
    X = _field(z1="z1*z2", w="-z1^2")
    Y = _field(z1="z2 - 1", w="-2*z1")
    Z = _field(z1="z1", w="2*w")
    assert (X.bracket(Y) + Y.bracket(X)).is_zero()
    jacobi = X.bracket(Y.bracket(Z)) + Y.bracket(Z.bracket(X)) + Z.bracket(X.bracket(Y))
    assert _same(jacobi, VectorField.zero())


def test_apply_and_linear_structure():
    X = _field(z1="z1")
    assert X.apply(parse_expr("z1^2")) is parse_expr("2*z1^2")
    assert combination([2, -1], [X, X]).to_dict() == {"z1": "z1"}
    assert (X - X).is_zero()


def test_conjugate_moves_coefficients_to_partners():
    X = _field(z1="i*z2", v="z1 + zb1")
    assert X.conjugate()["zb1"] is parse_expr("-i*zb2")
    assert X.conjugate().variables() == ("zb1", "v")
    assert X.conjugate()["v"] is X["v"]


def test_one_form_pairing():
    form = OneForm.of({"z1": 2, "v": parse_expr("z2")})
    assert form(_field(z1="1", v="3")) is parse_expr("2 + 3*z2")
    assert form.conjugate().coefficients["zb1"] is parse_expr("2")


def test_expansion_in_a_triangular_frame():
    frame_ = Frame(("A", "B"), (VectorField.partial("z1"), _field(z1="z1", z2="1")), coordinates=("z1", "z2"))
    coefficients = expand_in_frame(VectorField.partial("z2"), frame_)
    assert coefficients[0] is -z1
    assert coefficients[1] is ONE
    with pytest.raises(SingularFrame):
        expand_in_frame(VectorField.partial("w"), frame_)


def test_two_form_table_is_antisymmetric():
    table = TwoFormTable.from_mapping("rho", COFRAME_NAMES, {"rho^zeta": parse_expr("z1")})
    assert table[(0, 2)] is z1
    assert table[(2, 0)] is -z1
    assert table[(1, 1)].is_zero()
    assert table.to_dict() == {"rho^zeta": "z1"}
    with pytest.raises(KeyError):
        TwoFormTable.from_mapping("rho", COFRAME_NAMES, {"zeta^rho": z1})


def test_base_coframe_is_dual_to_the_frame(mlc, spec):
    for orientation in (1, -1):
        residuals = coframe(mlc, orientation).duality_residuals(frame(mlc, orientation))
        assert all(o.is_zero for o in zero_test_many(residuals, spec).values())
    assert check_duality(mlc, spec).passed
