"""Primary and secondary invariants, their cross-checks and classification."""

from __future__ import annotations

from .verdicts import (
    ClassificationVerdict,
    InvariantValues,
    PointError,
    Verdict,
    classify,
    invariants_at,
)
from .identities import (
    check_kbar_i0,
    check_lifted,
    check_lemma_10_6,
    check_prop_10_8,
    check_q0,
    check_torsion_compatibility,
    check_z_route,
    invariants_suite,
)
from .lifted import S5, S6, S6_WEIGHTS, LiftedDerivations, lifted_derivatives
from .primary import I0_expr, Q0_expr, Q0_full_form, V0_expr, Z_route

__all__ = [
    "ClassificationVerdict",
    "I0_expr",
    "InvariantValues",
    "LiftedDerivations",
    "PointError",
    "Q0_expr",
    "Q0_full_form",
    "S5",
    "S6",
    "S6_WEIGHTS",
    "V0_expr",
    "Verdict",
    "Z_route",
    "check_kbar_i0",
    "check_lifted",
    "check_lemma_10_6",
    "check_prop_10_8",
    "check_q0",
    "check_torsion_compatibility",
    "check_z_route",
    "classify",
    "invariants_at",
    "invariants_suite",
    "lifted_derivatives",
]
