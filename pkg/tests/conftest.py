"""Shared fixtures: small seeded sample specs and validated surfaces."""

import pytest

from expr.sampling import SampleSpec
from hypersurface.surface import validate
from model.catalog import builtin_surface


@pytest.fixture(scope="session")
def spec() -> SampleSpec:
    return SampleSpec(count=4, seed=7)


@pytest.fixture(scope="session")
def mlc(spec):
    return validate(builtin_surface("mlc"), spec)


@pytest.fixture(scope="session")
def shear(spec):
    return validate(builtin_surface("mlc-shear"), spec)


@pytest.fixture(scope="session")
def dilation(spec):
    return validate(builtin_surface("mlc-dilation"), spec)


@pytest.fixture(scope="session")
def quartic(spec):
    return validate(builtin_surface("tube-quartic"), spec)
