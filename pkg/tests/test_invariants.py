"""Invariants, their identities and the model classification."""

import mpmath
import pytest

from expr.evaluate import Point
from expr.parser import parse_expr
from expr.sampling import SampleSpec, ZeroTestResult, is_zero_on_samples
from expr.scalars import GaussianRational
from hypersurface.surface import Hypersurface
from invariants.identities import (
    check_kbar_i0,
    check_lemma_10_6,
    check_lifted,
    check_prop_10_8,
    check_q0,
    check_torsion_compatibility,
    invariants_suite,
)
from invariants.lifted import S6, S6_WEIGHTS
from invariants.primary import Q0_expr
from invariants.verdicts import InvariantValues, PointError, Verdict, classify, invariants_at

ZERO = GaussianRational(0)


def _model_points():
    return [Point({"z1": "1/2 + i/3", "z2": "1/4"}), Point({"z1": "-2", "z2": "i/5", "v": 1})]


def test_invariants_vanish_on_the_model(mlc):
    rows = invariants_at(mlc, _model_points())
    assert all(isinstance(r, InvariantValues) for r in rows)
    for row in rows:
        assert (row.I0, row.V0, row.Q0) == (ZERO, ZERO, ZERO)
        assert row.q0_real
        assert all(delta == ZERO for delta in row.deltas().values())


def test_float_mode_values_are_close_to_zero(mlc):
    (row,) = invariants_at(mlc, _model_points()[:1], "float")
    assert abs(row.I0) < 1e-15
    assert abs(row.V0) < 1e-15
    assert isinstance(row.I0, mpmath.mpc)


def test_singular_and_incomplete_points_are_reported_per_point(mlc):
    rows = invariants_at(mlc, [Point({"z1": 1, "z2": 1}), Point({"z1": 1}), _model_points()[0]])
    assert isinstance(rows[0], PointError)
    assert "division by zero" in rows[0].message
    assert isinstance(rows[1], PointError)
    assert isinstance(rows[2], InvariantValues)
    assert rows[0].to_dict()["point"]["z1"] == "1"


def test_degenerate_points_are_reported_by_name():
    # with s = z1 + zb1, t = z2 + zb2: F11b = 6 s and a = t / s^2
    H = Hypersurface(parse_expr("(z1 + zb1)^3 + 3*(z1 + zb1)*(z2 + zb2)^2"))
    rows = invariants_at(H, [Point({"z1": "i", "z2": 1}), Point({"z1": 1, "z2": "i"})])
    assert [r.message for r in rows] == [
        "degenerate point: F11b vanishes",
        "degenerate point: a vanishes",
    ]


def test_model_and_its_transforms_classify_as_equivalent(mlc, shear, spec):
    for H in (mlc, shear):
        verdict = classify(H, spec)
        assert verdict.verdict is Verdict.MODEL_EQUIVALENT
        assert verdict.to_dict()["sample"]["seed"] == spec.seed


def test_quartic_tube_is_not_equivalent(quartic, spec):
    verdict = classify(quartic, spec)
    assert verdict.verdict is Verdict.NOT_MODEL_EQUIVALENT
    assert verdict.witness is not None
    assert verdict.value != "0"


def test_perturbed_i0_gives_a_witness(mlc, spec):
    verdict = classify(mlc, spec, perturb_i0=parse_expr("z1"))
    assert verdict.verdict is Verdict.NOT_MODEL_EQUIVALENT
    assert verdict.invariant == "I0"
    assert verdict.value == verdict.witness["z1"]


def test_exhausted_sampling_is_inconclusive(mlc, spec, monkeypatch):
    def exhausted(named, spec_=None, variables=()):
        return {name: ZeroTestResult("exhausted", 0, 99) for name in named}

    monkeypatch.setattr("invariants.verdicts.zero_test_many", exhausted)
    verdict = classify(mlc, spec)
    assert verdict.verdict is Verdict.INCONCLUSIVE
    assert verdict.evidence["V0"]["status"] == "exhausted"


def test_invariant_identities_on_the_model_and_a_transform(mlc, shear, spec):
    for H in (mlc, shear):
        report = invariants_suite(H, spec)
        assert report.passed, report.failures()


def test_torsion_compatibility_detects_a_perturbation(mlc, spec):
    assert check_torsion_compatibility(mlc, spec).passed
    assert not check_torsion_compatibility(mlc, spec, parse_expr("z1*zb2")).passed


def test_documented_identity_names(mlc, spec):
    assert check_prop_10_8 is check_kbar_i0
    assert check_lemma_10_6 is check_torsion_compatibility
    for check in (check_prop_10_8, check_lemma_10_6):
        report = check(mlc, spec)
        assert report.passed, report.failures()


def test_q0_is_real_on_a_non_model_surface(quartic, spec):
    report = check_q0(quartic, spec)
    assert report.passed, report.failures()


def test_lifted_identity_with_nonzero_group_parameters(quartic):
    spec = SampleSpec(count=5, seed=11)
    report = check_lifted(quartic, spec)
    assert report.passed, report.failures()
    assert report.findings["S6 weight"].startswith("holds: ")
    assert "cbar2" in report.findings["S6 weight"]


def test_lifted_readings_discriminate_on_the_quartic_tube(quartic):
    spec = SampleSpec(count=5, seed=11)
    report = check_lifted(quartic, spec)
    results = {r.name: r for r in report.results}
    assert results["S6 weight cbar2"].passed and not results["S6 weight cbar2"].finding
    for weight in ("c2", "c_cbar"):
        assert results[f"S6 weight {weight}"].finding
        assert not results[f"S6 weight {weight}"].passed
    assert report.findings["S6 weight"] == "holds: cbar2"

    q0_nonzero = is_zero_on_samples(Q0_expr(quartic), spec).status == "nonzero"
    assert results["Q0 factor 1"].finding
    assert results["Q0 factor 1"].passed is not q0_nonzero
    assert report.findings["Q0 factor"] == ("holds: 2" if q0_nonzero else "holds: 2, 1")


def test_readings_all_hold_on_the_model(mlc, spec):
    report = check_lifted(mlc, spec)
    assert report.findings["S6 weight"] == "holds: c2, c_cbar, cbar2"
    assert report.findings["Q0 factor"] == "holds: 2, 1"


def test_s6_weights():
    V0 = parse_expr("z1")
    assert S6(V0, "cbar2") is parse_expr("z1/cb^2")
    assert len(S6_WEIGHTS) == 3
    with pytest.raises(ValueError):
        S6(V0, "c3")

