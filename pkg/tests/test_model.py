"""Catalog, rigid maps and the symmetry algebra of the light-cone model."""

import pytest

from expr.checks import identity_checks
from expr.errors import RigidMapError
from expr.nodes import var
from expr.parser import parse_expr
from expr.sampling import SampleSpec
from expr.scalars import GaussianRational
from expr.variables import Z1, Z2, ZB1
from hypersurface.surface import Hypersurface, validate
from invariants.verdicts import classify
from model.catalog import EXPECTED_VERDICTS, builtin_surface, catalog_names, shear_map
from model.graph import mlc_graph
from model.rigid import RigidMap, transform_surface
from model.suite import catalog_maps_check, model_structure_suite
from model.symmetries import (
    RIGID_LABELS,
    algebra_structure_check,
    commutator_table_check,
    restrict,
    rigid_isomorphism_check,
    rigidity_check,
    table_algebra,
    table_entry,
    tangency_check,
)


def test_mlc_graph_matches_its_dsl_form():
    text = "(z1*zb1 + z1^2*zb2/2 + zb1^2*z2/2) / (1 - z2*zb2)"
    (result,) = identity_checks({"mlc": (mlc_graph(), parse_expr(text))}, SampleSpec(count=3, seed=1))
    assert result.passed
    assert builtin_surface("mlc") is mlc_graph()
    assert "tube-quartic" in catalog_names()


def test_unknown_builtin_is_a_key_error():
    with pytest.raises(KeyError):
        builtin_surface("nope")


def test_rigid_map_rejects_bad_data():
    z1, z2 = var(Z1), var(Z2)
    with pytest.raises(RigidMapError):
        RigidMap((z1, z2), a=GaussianRational(0, 1))
    with pytest.raises(RigidMapError):
        RigidMap((z1, z2), g=var(ZB1))
    with pytest.raises(RigidMapError):
        RigidMap((z1, z2), a=0)


def test_transformed_model_is_still_a_valid_surface(mlc, spec):
    image = transform_surface(mlc, shear_map(), spec)
    assert isinstance(image, Hypersurface)
    assert shear_map().composition_report(spec).passed
    assert catalog_maps_check(spec).passed


def test_model_structure(spec):
    report = model_structure_suite(spec)
    assert report.passed, report.failures()


def test_commutator_table_and_tangency(spec):
    report = commutator_table_check()
    assert report.passed, report.failures()
    assert tangency_check(spec).passed


def test_table_lookup_is_antisymmetric():
    assert table_entry("X1", "X2") == {"X1": 2}
    assert table_entry("X2", "X1") == {"X1": -2}
    assert table_entry("X1", "X3") == {}


def test_rigid_labels_span_a_subalgebra():
    A = table_algebra()
    assert restrict(A, RIGID_LABELS).dim == 7
    with pytest.raises(ValueError):
        restrict(A, ("X1", "X8"))


def test_rigidity_and_algebra_structure():
    assert all(r.passed for r in rigidity_check())
    assert algebra_structure_check().passed
    assert rigid_isomorphism_check().passed


@pytest.mark.parametrize("name", sorted(EXPECTED_VERDICTS))
def test_catalog_verdicts(name):
    spec = SampleSpec(count=3, seed=5)
    verdict = classify(validate(builtin_surface(name), spec), spec)
    assert verdict.verdict.value == EXPECTED_VERDICTS[name]
