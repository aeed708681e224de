"""Identities among the invariants, the torsions and the lifted derivations."""

from __future__ import annotations

from typing import Optional

from expr.calculus import conjugate
from expr.checks import CheckReport, identity_checks
from expr.nodes import ZERO, Expr, as_expr, mul, quotient, var
from expr.sampling import SampleSpec
from expr.variables import C, CB
from hypersurface.checks import base_torsions
from hypersurface.surface import Hypersurface

from .lifted import S5, S6, S6_WEIGHTS, lifted_derivatives
from .primary import I0_expr, Q0_expr, Q0_pbar_variant, Q0_full_form, V0_expr, Z_route


def check_z_route(H: Hypersurface, spec: Optional[SampleSpec] = None) -> CheckReport:
    """Closed forms of ``I0``, ``V0`` against ``Z5 - conj(Z8)`` and ``Z6``."""
    I0_z, V0_z = Z_route(H)
    report = CheckReport("z_route")
    report.extend(
        identity_checks({"I0": (I0_expr(H), I0_z), "V0": (V0_expr(H), V0_z)}, spec)
    )
    return report


def check_kbar_i0(H: Hypersurface, spec: Optional[SampleSpec] = None) -> CheckReport:
    """``Kbar(I0)/abar = -2 conj(I0)``."""
    I0 = I0_expr(H)
    report = CheckReport("kbar_i0")
    report.extend(
        identity_checks(
            {"Kbar(I0)/abar = -2 conj(I0)": (quotient(H.Kbar(I0), H.abar), mul(-2, conjugate(I0)))},
            spec,
        )
    )
    return report


def torsion_compatibility_sides(H: Hypersurface):
    """Left and right sides of the compatibility identity among the torsions."""
    t = base_torsions(H)
    a, abar, B, Bbar = H.a, H.abar, H.B, H.Bbar
    lhs = H.L1bar(t.Z5) - quotient(H.K(t.Z6), a)
    rhs = (
        mul(Bbar, quotient(H.Kbar(t.Z5), abar))
        + mul(t.Z5, t.K6)
        - mul(t.Z6, t.K5)
        - H.L1(t.Z8)
        + mul(B, quotient(H.K(t.Z8), a))
        + mul(t.Z8, conjugate(t.K6))
        + mul(t.Z9, conjugate(t.Z6))
    )
    return lhs, rhs


def check_torsion_compatibility(
    H: Hypersurface,
    spec: Optional[SampleSpec] = None,
    perturbation: object = ZERO,
) -> CheckReport:
    """Torsion compatibility; ``perturbation`` is added to the right side."""
    lhs, rhs = torsion_compatibility_sides(H)
    report = CheckReport("torsion_compatibility")
    report.extend(
        identity_checks({"L1bar(Z5) - K(Z6)/a": (lhs, rhs + as_expr(perturbation))}, spec)
    )
    return report


def check_q0(H: Hypersurface, spec: Optional[SampleSpec] = None) -> CheckReport:
    """Reality of ``Q0`` and agreement of its forms."""
    Q0 = Q0_expr(H)
    claims = {
        "Q0 real": (conjugate(Q0), Q0),
        "Q0 reduced = Q0 full": (Q0, Q0_full_form(H)),
        "Q0 Pbar variant": (Q0_pbar_variant(H), Q0),
    }
    report = CheckReport("q0")
    report.extend(identity_checks(claims, spec, findings=frozenset({"Q0 Pbar variant"})))
    return report


def lifted_identity_residual(H: Hypersurface, weight: str = "cbar2", q0_factor: int = 2) -> Expr:
    """``d_kappabar(S5) - d_zeta(S6) - q0_factor Q0/(c cbar)``."""
    lifted = lifted_derivatives(H)
    S5_ = S5(I0_expr(H))
    S6_ = S6(V0_expr(H), weight)
    target = quotient(mul(q0_factor, Q0_expr(H)), mul(var(C), var(CB)))
    return lifted.d_kappabar.apply(S5_) - lifted.d_zeta.apply(S6_) - target


def _note_holding(report: CheckReport, key: str, holding) -> None:
    report.note(key, "holds: " + (", ".join(holding) if holding else "none"))


def check_lifted(H: Hypersurface, spec: Optional[SampleSpec] = None) -> CheckReport:
    """The secondary invariant read off from the lifted derivations."""
    lifted = lifted_derivatives(H)
    c = var(C)
    claims = {
        "d_alpha(c) = c": (lifted.d_alpha.apply(c), c),
        "d_rho(k) = 0": (lifted.d_rho.apply(H.k), ZERO),
    }
    for weight in S6_WEIGHTS:
        claims[f"S6 weight {weight}"] = (lifted_identity_residual(H, weight), ZERO)
    claims["Q0 factor 1"] = (lifted_identity_residual(H, q0_factor=1), ZERO)
    findings = frozenset(f"S6 weight {w}" for w in S6_WEIGHTS if w != "cbar2") | {"Q0 factor 1"}
    report = CheckReport("lifted")
    report.extend(identity_checks(claims, spec, findings=findings))
    passed = {r.name: r.passed for r in report.results}
    _note_holding(report, "S6 weight", [w for w in S6_WEIGHTS if passed[f"S6 weight {w}"]])
    factors = [f for f, name in (("2", "S6 weight cbar2"), ("1", "Q0 factor 1")) if passed[name]]
    _note_holding(report, "Q0 factor", factors)
    return report


def invariants_suite(H: Hypersurface, spec: Optional[SampleSpec] = None) -> CheckReport:
    report = CheckReport("invariants")
    report.section(check_z_route(H, spec))
    report.section(check_kbar_i0(H, spec))
    report.section(check_torsion_compatibility(H, spec))
    report.section(check_q0(H, spec))
    report.section(check_lifted(H, spec))
    return report


check_prop_10_8 = check_kbar_i0
check_lemma_10_6 = check_torsion_compatibility


__all__ = [
    "check_torsion_compatibility",
    "check_lifted",
    "check_kbar_i0",
    "check_lemma_10_6",
    "check_prop_10_8",
    "check_q0",
    "check_z_route",
    "invariants_suite",
    "torsion_compatibility_sides",
    "lifted_identity_residual",
]
