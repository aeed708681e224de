"""Structure-constant algebras and the Maurer-Cartan system of the model."""

import pytest

from expr.errors import LieAlgebraError
from expr.linalg import determinant
from expr.scalars import GaussianRational
from liealg.algebra import (
    LieAlgebraSC,
    LinearMap,
    center,
    compare_tables,
    isomorphism_check,
    jacobi_check,
    killing_form,
)
from liealg.maurer_cartan import (
    MC_EQUATIONS,
    W_LABELS,
    d_squared,
    dalpha_consistency,
    dual_algebra_from_mc,
    expected_dual_algebra,
    expected_w_algebra,
    liealg_suite,
    w_algebra,
    w_basis,
    without_dalpha,
)


def _sl2() -> LieAlgebraSC:
    return LieAlgebraSC.from_brackets(
        ("H", "E", "F"),
        {("H", "E"): {"E": 2}, ("H", "F"): {"F": -2}, ("E", "F"): {"H": 1}},
    )


def _heisenberg() -> LieAlgebraSC:
    return LieAlgebraSC.from_brackets(("X", "Y", "Z"), {("X", "Y"): {"Z": 1}})


def test_brackets_are_bilinear_and_antisymmetric():
    A = _sl2()
    H, E, F = (A.basis_vector(i) for i in range(3))
    assert A.bracket(E, H) == (0, -2, 0)
    assert A.bracket((1, 1, 0), F) == (1, 0, -2)
    assert A.format(A.bracket(H, F)) == "(-2)*F"


def test_inconsistent_data_is_rejected():
    with pytest.raises(LieAlgebraError):
        LieAlgebraSC(("a", "b"), [[[0, 0], [1, 0]], [[1, 0], [0, 0]]])
    with pytest.raises(LieAlgebraError):
        LieAlgebraSC.from_brackets(("a", "b"), {("a", "c"): {"a": 1}})
    with pytest.raises(LieAlgebraError):
        LieAlgebraSC.from_brackets(("a", "b"), {("a", "b"): {"a": 1}, ("b", "a"): {"a": 1}})


def test_killing_form_and_center():
    sl2 = _sl2()
    assert determinant(killing_form(sl2)) == GaussianRational(-128)
    assert center(sl2) == []
    heis = _heisenberg()
    assert jacobi_check(heis).passed
    (z,) = center(heis)
    assert z[0] == 0 and z[1] == 0 and z[2] != 0
    assert all(c.is_zero() for row in killing_form(heis) for c in row)


def test_isomorphism_check():
    sl2 = _sl2()
    assert isomorphism_check(sl2, sl2, LinearMap.identity(3)).passed
    swap = LinearMap.of([[-1, 0, 0], [0, 0, 1], [0, 1, 0]])
    assert isomorphism_check(sl2, sl2, swap).passed
    assert not isomorphism_check(sl2, sl2, LinearMap.of([[1, 0, 0], [0, 0, 1], [0, 1, 0]])).passed
    with pytest.raises(LieAlgebraError):
        isomorphism_check(sl2, LieAlgebraSC(("a",), [[[0]]]), LinearMap.identity(3))


def test_dual_algebra_matches_the_tabulated_dual():
    report = compare_tables(dual_algebra_from_mc(), expected_dual_algebra())
    assert report.passed, report.failures()
    assert jacobi_check(dual_algebra_from_mc()).passed


def test_w_basis_reproduces_the_rigid_table():
    assert w_basis().is_invertible()
    W = w_algebra()
    assert W.labels == W_LABELS
    assert compare_tables(W, expected_w_algebra()).passed


def test_exterior_derivative_squares_to_zero():
    assert all(not three for three in d_squared(MC_EQUATIONS).values())
    broken = d_squared(without_dalpha())
    assert any(broken.values())
    assert dalpha_consistency().passed


def test_liealg_suite_passes():
    report = liealg_suite()
    assert report.passed, report.failures()
