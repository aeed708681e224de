"""Validation of the standing hypotheses and the frame identities."""

import pytest

from expr.errors import HypersurfaceValidationError
from expr.parser import parse_expr
from expr.sampling import zero_test_many
from hypersurface.checks import (
    base_torsions,
    check_bracket_identities,
    check_lemma_identities,
    check_structure_initial,
    structure_suite,
)
from hypersurface.frames import frame
from hypersurface.surface import HYPOTHESES, Hypersurface, ValidationReport, validate


def _statuses(text: str, spec) -> dict:
    result = validate(parse_expr(text), spec, raise_on_failure=False)
    assert isinstance(result, ValidationReport)
    return result.statuses()


def test_model_passes_every_hypothesis(mlc):
    assert isinstance(mlc, Hypersurface)
    assert mlc.report.statuses() == {name: True for name in HYPOTHESES}


def test_levi_rank_two_is_rejected(spec):
    statuses = _statuses("z1*zb1 + z2*zb2", spec)
    assert statuses["levi_nonzero"]
    assert not statuses["rank_one"]


def test_two_degenerate_graph_is_rejected(spec):
    statuses = _statuses("z1*zb1", spec)
    assert statuses["rank_one"]
    assert not statuses["two_nondegenerate"]


def test_other_hypotheses(spec):
    assert not _statuses("z1*zb1 + v", spec)["rigid"]
    assert not _statuses("i*z1*zb1", spec)["real"]
    assert not _statuses("z2*zb2", spec)["levi_nonzero"]
    assert _statuses("z1*zb1 + c", spec) == {"variables": False}


def test_rejection_raises_with_the_report(spec):
    with pytest.raises(HypersurfaceValidationError) as info:
        validate(parse_expr("z1*zb1 + z2*zb2"), spec)
    assert "rank_one" in info.value.report.failed()


def test_slant_function_spans_the_levi_kernel(mlc, spec):
    outcomes = zero_test_many(
        {f"row {n}": r for n, r in enumerate(mlc.kernel_residuals())}, spec
    )
    assert all(o.is_zero for o in outcomes.values())


def test_orientation_must_be_a_sign(mlc):
    with pytest.raises(ValueError):
        frame(mlc, 0)


def test_bracket_identities_for_both_orientations(mlc, shear, spec):
    for H in (mlc, shear):
        for orientation in (1, -1):
            report = check_bracket_identities(H, spec, orientation)
            assert report.passed, report.failures()


def test_lemma_identities_and_their_findings(shear, spec):
    report = check_lemma_identities(shear, spec)
    assert report.passed, report.failures()
    assert report.findings["L1(k) quotient"] == "holds: L1(k) quotient"


def test_initial_structure_equations(mlc, dilation, spec):
    for H in (mlc, dilation):
        report = check_structure_initial(H, spec)
        assert report.passed, report.failures()


def test_full_structure_suite_on_a_transformed_model(shear, spec):
    report = structure_suite(shear, spec)
    assert report.passed, report.failures()


def test_model_torsions_are_orientation_free(mlc, spec):
    t = base_torsions(mlc).as_dict()
    assert set(t) == {"R1", "R2", "K5", "K6", "Z5", "Z6", "Z8", "Z9"}
    outcomes = zero_test_many({"R2 - K5": t["R2"] - t["K5"]}, spec)
    assert outcomes["R2 - K5"].is_zero
