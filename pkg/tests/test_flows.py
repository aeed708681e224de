"""Closed-form flows of the rigid symmetries."""

from fractions import Fraction

import mpmath
import pytest

from expr.checks import identity_checks
from expr.errors import FlowDomainError
from expr.nodes import ZERO
from expr.scalars import GaussianRational, is_close
from model.flows import (
    _integrate,
    flow,
    flow_residuals,
    flow_variants,
    float_check,
    graph_invariance,
    group_law_claims,
    rigid_flows,
    rigid_shape,
    variant_checks,
)
from model.symmetries import RIGID_LABELS


def _holds(claims, spec) -> bool:
    return all(r.passed for r in identity_checks(claims, spec))


def test_every_rigid_label_has_a_flow():
    assert tuple(sorted(rigid_flows())) == tuple(sorted(RIGID_LABELS))


@pytest.mark.parametrize("label", RIGID_LABELS)
def test_flow_solves_its_equation(label, spec):
    F = rigid_flows()[label]
    residuals = {name: (e, ZERO) for name, e in flow_residuals(F).items()}
    assert _holds(residuals, spec)
    assert _holds(group_law_claims(F), spec)
    assert all(r.passed for r in rigid_shape(F))


def test_exact_flow_values():
    assert flow("X1", Fraction(1, 2), (1, 0, 0)) == (1, 0, GaussianRational(0, Fraction(1, 2)))
    assert flow("X2", 2, (1, 1, 1)) == (2, 1, 4)


def test_singular_flow_raises():
    # Q = (1 + z2) + (1 - z2) E^2 vanishes here
    with pytest.raises(FlowDomainError):
        flow("X6", 2, (1, Fraction(5, 3), 0))


def test_variants_match_their_expected_outcome(spec):
    for F, expected in flow_variants():
        residuals = {name: (e, ZERO) for name, e in flow_residuals(F).items()}
        assert _holds(residuals, spec) is expected, F.name
    report = variant_checks(spec)
    assert report.passed
    assert sorted(report.findings.values()).count("holds") == 1


@pytest.mark.parametrize("label", ["X2", "X4"])
def test_flows_preserve_the_model(label, spec):
    assert graph_invariance(rigid_flows()[label], spec).passed


@pytest.mark.parametrize("label", RIGID_LABELS)
def test_closed_form_agrees_with_integration(label, spec):
    report = float_check(label, spec, times=(Fraction(1, 4),))
    assert report.passed, report.failures()


def test_integration_of_x6_is_not_a_single_euler_step():
    # z2' = z2^2 - 1 along X6; z2 + t (z2^2 - 1) = -4.0625 - 1.75i is the Euler step
    p = [mpmath.mpc("0.5"), mpmath.mpc(-3, "3.5"), mpmath.mpc("0.25")]
    with mpmath.workdps(30):
        numeric = _integrate("X6", p, Fraction(1, 4))
        closed = flow("X6", Fraction(1, 4), p, "float")
    assert abs(numeric[1] - mpmath.mpc("-2.3047", "0.8787")) < 1e-3
    assert all(is_close(a, b) for a, b in zip(closed, numeric))
