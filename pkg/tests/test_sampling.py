"""Seeded sampling and probabilistic zero testing."""

import pytest

from expr.errors import SamplingExhausted
from expr.evaluate import Evaluator
from expr.parser import parse_expr
from expr.sampling import SampleSpec, is_zero_on_samples, sample_points, zero_test_many


def _keys(points):
    return [p.key() for p in points]


def test_sampling_is_deterministic_per_seed():
    e = parse_expr("z1*zb2 + v")
    spec = SampleSpec(count=5, seed=3)
    assert _keys(sample_points([e], spec)) == _keys(sample_points([e], spec))
    assert _keys(sample_points([e], spec)) != _keys(sample_points([e], spec.with_seed(4)))


def test_sampled_points_avoid_singularities():
    e = parse_expr("1/(z1*zb1 - 1)")
    spec = SampleSpec(count=10, numerator_bound=1, denominator_bound=1, seed=0)
    for point in sample_points([e], spec):
        Evaluator(point)(e)


def test_identity_that_needs_expansion_is_zero():
    e = parse_expr("(z1 + zb1)^2 - z1^2 - 2*z1*zb1 - zb1^2")
    assert not e.is_zero()
    assert is_zero_on_samples(e, SampleSpec(count=5)).is_zero


def test_nonzero_expression_has_an_exact_witness():
    e = parse_expr("z1 - z2")
    outcome = is_zero_on_samples(e, SampleSpec(count=5))
    assert outcome.status == "nonzero"
    assert Evaluator(outcome.witness)(e) == outcome.value
    assert "witness" in outcome.to_dict()


def test_exclusion_that_rejects_everything_exhausts():
    spec = SampleSpec(count=2, max_rejections=3).with_exclusion(lambda p: True)
    with pytest.raises(SamplingExhausted) as info:
        is_zero_on_samples(parse_expr("z1"), spec)
    assert info.value.accepted == 0
    outcomes = zero_test_many({"a": parse_expr("z1"), "b": parse_expr("z2")}, spec)
    assert {o.status for o in outcomes.values()} == {"exhausted"}


def test_constants_are_decided_without_sampling():
    outcomes = zero_test_many({"zero": parse_expr("z1 - z1"), "one": parse_expr("1")})
    assert outcomes["zero"].is_zero
    assert outcomes["one"].status == "nonzero"


def test_invalid_specs_are_rejected():
    with pytest.raises(ValueError):
        SampleSpec(count=0)
