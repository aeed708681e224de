"""Exact Gaussian-rational arithmetic and the float helpers."""

from fractions import Fraction

import mpmath
import pytest

from config import settings
from expr.scalars import GaussianRational, I, format_scalar, is_close, scalar_is_zero, to_float


def test_field_operations_are_exact():
    a = GaussianRational(Fraction(1, 2), 3)
    b = GaussianRational(2, -1)
    assert a + b == GaussianRational(Fraction(5, 2), 2)
    assert a * b == GaussianRational(4, Fraction(11, 2))
    assert (a / b) * b == a
    assert I * I == -1
    assert b ** -2 * b ** 2 == 1


def test_inverse_of_zero_raises():
    with pytest.raises(ZeroDivisionError):
        GaussianRational(0).inverse()


def test_floats_are_refused():
    with pytest.raises(TypeError):
        GaussianRational(0.5)
    with pytest.raises(TypeError):
        GaussianRational.coerce(1j)


def test_printing_uses_dsl_syntax():
    assert str(GaussianRational(Fraction(3, 4))) == "3/4"
    assert str(-I) == "-i"
    assert str(GaussianRational(Fraction(1, 2), -3)) == "1/2 - 3*i"
    assert format_scalar(GaussianRational(0, Fraction(2, 5))) == "2/5*i"


def test_conjugate_and_realness():
    z = GaussianRational(1, 2)
    assert z.conjugate() == GaussianRational(1, -2)
    assert (z * z.conjugate()).is_real()
    assert z.abs2() == 5


def test_is_close_uses_relative_tolerance():
    a = mpmath.mpc(1e6, 0)
    assert is_close(a, a + 1e-4)
    assert not is_close(mpmath.mpc(1), mpmath.mpc(1.001))
    assert is_close(GaussianRational(1, 1), to_float(GaussianRational(1, 1)))


def test_scalar_is_zero_in_both_modes():
    assert scalar_is_zero(GaussianRational(0))
    assert scalar_is_zero(mpmath.mpc(0))
    assert not scalar_is_zero(GaussianRational(0, 1))


def test_precision_floor_is_sixty_bits():
    assert settings.PRECISION_BITS >= 60
