"""Exact Lie algebras and the Maurer-Cartan system of the rigid model."""

from __future__ import annotations

from .algebra import (
    LieAlgebraSC,
    LinearMap,
    center,
    compare_tables,
    isomorphism_check,
    jacobi_check,
    killing_form,
)
from .maurer_cartan import (
    DUAL_LABELS,
    FORMS,
    MC_EQUATIONS,
    W_LABELS,
    change_basis,
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

__all__ = [
    "DUAL_LABELS",
    "FORMS",
    "LieAlgebraSC",
    "LinearMap",
    "MC_EQUATIONS",
    "W_LABELS",
    "center",
    "change_basis",
    "compare_tables",
    "d_squared",
    "dalpha_consistency",
    "dual_algebra_from_mc",
    "expected_dual_algebra",
    "expected_w_algebra",
    "isomorphism_check",
    "jacobi_check",
    "killing_form",
    "liealg_suite",
    "w_algebra",
    "w_basis",
    "without_dalpha",
]
