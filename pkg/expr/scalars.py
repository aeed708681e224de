"""Scalar arithmetic.

Two modes coexist: exact Gaussian rationals (the default, used for every
identity check) and mpmath complex numbers at a configured precision, used
only for transcendental flows and the finite-difference jet oracle.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from typing import Any, Union

import mpmath

from config import settings


class ScalarMode(str, Enum):
    EXACT = "exact"
    FLOAT = "float"


def _frac(value: Any) -> Fraction:
    if type(value) is Fraction:
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; use Fraction or the float mode")
    return Fraction(value)


class GaussianRational:
    """A complex number with rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Any = 0, im: Any = 0) -> None:
        self.re = _frac(re)
        self.im = _frac(im)

    @classmethod
    def coerce(cls, value: Any) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            raise TypeError("complex floats are not exact")
        return cls(value)

    # arithmetic -----------------------------------------------------------
    def __add__(self, other: Any) -> "GaussianRational":
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Any) -> "GaussianRational":
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Any) -> "GaussianRational":
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other: Any) -> "GaussianRational":
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        if not self.im and not o.im:
            return GaussianRational(self.re * o.re, 0)
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "GaussianRational":
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "GaussianRational":
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __pow__(self, n: int) -> "GaussianRational":
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def inverse(self) -> "GaussianRational":
        norm = self.re * self.re + self.im * self.im
        if not norm:
            raise ZeroDivisionError("inverse of zero")
        return GaussianRational(self.re / norm, -self.im / norm)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # predicates -----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __eq__(self, other: Any) -> bool:
        o = _coerce_or_none(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    # conversions ----------------------------------------------------------
    def to_mpc(self) -> mpmath.mpc:
        return mpmath.mpc(
            mpmath.mpf(self.re.numerator) / self.re.denominator,
            mpmath.mpf(self.im.numerator) / self.im.denominator,
        )

    def __repr__(self) -> str:
        return f"GaussianRational({self.re}, {self.im})"

    def __str__(self) -> str:
        """DSL text: ``3/4``, ``-i``, ``1/2 - 3*i``."""
        if not self.im:
            return str(self.re)
        imag = _imag_text(abs(self.im))
        if not self.re:
            return imag if self.im > 0 else f"-{imag}"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re} {sign} {imag}"


def _imag_text(magnitude: Fraction) -> str:
    return "i" if magnitude == 1 else f"{magnitude}*i"


def _coerce_or_none(value: Any) -> Union[GaussianRational, None]:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction)):
        return GaussianRational(value)
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)

Scalar = Union[GaussianRational, mpmath.mpc]


def working_precision() -> int:
    return settings.PRECISION_BITS


def to_float(value: Scalar) -> mpmath.mpc:
    if isinstance(value, GaussianRational):
        return value.to_mpc()
    return mpmath.mpc(value)


def conjugate_scalar(value: Scalar) -> Scalar:
    if isinstance(value, GaussianRational):
        return value.conjugate()
    return mpmath.conj(value)


def scalar_is_zero(value: Scalar) -> bool:
    if isinstance(value, GaussianRational):
        return value.is_zero()
    return value == 0


def is_close(a: Scalar, b: Scalar, tolerance: float | None = None) -> bool:
    """Relative comparison in float mode; scale floor of 1 for tiny values."""
    tol = settings.FLOAT_TOLERANCE if tolerance is None else tolerance
    fa, fb = to_float(a), to_float(b)
    scale = max(mpmath.mpf(1), abs(fa), abs(fb))
    return abs(fa - fb) <= tol * scale


def format_scalar(value: Scalar, digits: int = 20) -> str:
    if isinstance(value, GaussianRational):
        return str(value)
    return mpmath.nstr(mpmath.mpc(value), digits)


__all__ = [
    "GaussianRational",
    "I",
    "ONE",
    "Scalar",
    "ScalarMode",
    "ZERO",
    "conjugate_scalar",
    "format_scalar",
    "is_close",
    "scalar_is_zero",
    "to_float",
    "working_precision",
]
