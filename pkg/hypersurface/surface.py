"""
Rigid hypersurfaces ``u = F(z1, z2, zb1, zb2)`` of constant Levi rank one.

``validate`` checks the standing hypotheses on sampled points and returns a
``Hypersurface`` whose fundamental functions are computed once:

* ``ell = 2 F_{z1 zb1}`` (the Levi form along L1),
* the slant function ``k = -F_{z2 zb1} / F_{z1 zb1}`` spanning the Levi kernel,
* ``P = ell_{z1} / ell``,
* ``a = L1bar(k)`` and ``b = L1(k)``,
* ``B = -Pbar/3 + L1bar(a) / (3 a)``.

Every function here is independent of ``v``, so applying a frame field to
it reduces to the coordinate part of the field.
"""

from __future__ import annotations

from functools import cached_property
from typing import Dict, List, Optional

from config.logging_setup import get_logger
from expr.calculus import conjugate, derivative, free_vars
from expr.checks import CheckReport, CheckResult, result_from_zero_test
from expr.errors import HypersurfaceValidationError
from expr.evaluate import Evaluator
from expr.nodes import Expr, const, mul, neg, quotient
from expr.sampling import SampleSpec, is_zero_on_samples, sample_points
from expr.scalars import GaussianRational
from expr.variables import SURFACE_VARIABLES

logger = get_logger(__name__)

HYPOTHESES = ("variables", "rigid", "real", "levi_nonzero", "rank_one", "two_nondegenerate")

_ALLOWED = frozenset(v.name for v in SURFACE_VARIABLES)


class ValidationReport(CheckReport):
    """Per-hypothesis statuses with witnesses for the failures."""

    def statuses(self) -> Dict[str, bool]:
        return {r.name: r.passed for r in self.results}


def _nonvanishing(name: str, e: Expr, spec: SampleSpec) -> CheckResult:
    """Passes when ``e`` is nonzero at every sampled point."""
    if e.is_zero():
        return CheckResult(name, False, "identically zero")
    points = sample_points([e], spec)
    for point in points:
        value = Evaluator(point)(e)
        if value.is_zero():
            return CheckResult(name, False, "vanishes", point.to_dict(), str(value))
    return CheckResult(name, True)


class Hypersurface:
    """A validated rigid graph with cached fundamental functions."""

    def __init__(self, F: Expr, report: Optional[ValidationReport] = None) -> None:
        self.F = F
        self.report = report
        self.F11b = derivative(F, "z1", "zb1")
        self.F21b = derivative(F, "z2", "zb1")
        self.F12b = derivative(F, "z1", "zb2")
        self.F22b = derivative(F, "z2", "zb2")
        self.ell = mul(2, self.F11b)
        self.k = neg(quotient(self.F21b, self.F11b))
        self.kbar = conjugate(self.k)
        self.P = quotient(derivative(self.ell, "z1"), self.ell)
        self.Pbar = conjugate(self.P)
        self.a = self.L1bar(self.k)
        self.b = self.L1(self.k)
        self.abar = conjugate(self.a)
        self.bbar = conjugate(self.b)
        self._frames: Dict[object, object] = {}

    @cached_property
    def B(self) -> Expr:
        third = const(GaussianRational(1) / 3)
        return mul(third, quotient(self.L1bar(self.a), self.a)) - mul(third, self.Pbar)

    @cached_property
    def Bbar(self) -> Expr:
        return conjugate(self.B)

    # frame fields acting on v-independent functions -----------------------
    def L1(self, e: Expr) -> Expr:
        return derivative(e, "z1")

    def L1bar(self, e: Expr) -> Expr:
        return derivative(e, "zb1")

    def K(self, e: Expr) -> Expr:
        return mul(self.k, derivative(e, "z1")) + derivative(e, "z2")

    def Kbar(self, e: Expr) -> Expr:
        return mul(self.kbar, derivative(e, "zb1")) + derivative(e, "zb2")

    def T(self, e: Expr) -> Expr:
        return mul(self.ell, derivative(e, "v"))

    # Levi data ------------------------------------------------------------
    def levi_matrix(self) -> List[List[Expr]]:
        return [
            [mul(2, self.F11b), mul(2, self.F21b)],
            [mul(2, self.F12b), mul(2, self.F22b)],
        ]

    def levi_determinant(self) -> Expr:
        m = self.levi_matrix()
        return mul(m[0][0], m[1][1]) - mul(m[0][1], m[1][0])

    def domain_quantities(self) -> Dict[str, Expr]:
        """Functions defined at every point of ``M``, in evaluation order; ``F11b`` and ``a`` are also nonzero there."""
        return {"F": self.F, "F11b": self.F11b, "k": self.k, "P": self.P, "a": self.a}

    def kernel_residuals(self) -> List[Expr]:
        """``levi_matrix . (k, 1)^T``; both entries vanish identically."""
        m = self.levi_matrix()
        return [mul(m[0][0], self.k) + m[0][1], mul(m[1][0], self.k) + m[1][1]]

    # cached frames (built in hypersurface.frames) -------------------------
    def cached(self, key: object, build):
        if key not in self._frames:
            self._frames[key] = build()
        return self._frames[key]

    def __repr__(self) -> str:
        return f"Hypersurface(F={self.F})"


def slant_k(H: Hypersurface) -> Expr:
    return H.k


def p_fun(H: Hypersurface) -> Expr:
    return H.P


def b_fun(H: Hypersurface) -> Expr:
    return H.B


def levi_matrix(H: Hypersurface) -> List[List[Expr]]:
    return H.levi_matrix()


def validate(F: Expr, spec: Optional[SampleSpec] = None, raise_on_failure: bool = True):
    """Check the hypotheses on ``F`` and build the hypersurface.

    Returns the validated ``Hypersurface``; on failure raises
    ``HypersurfaceValidationError`` carrying the report, or returns the
    report when ``raise_on_failure`` is false.
    """
    spec = spec or SampleSpec()
    report = ValidationReport("validation")

    foreign = sorted(free_vars(F) - _ALLOWED)
    report.add(
        CheckResult("variables", not foreign, f"foreign variables {foreign}" if foreign else "")
    )
    if foreign:
        return _finish(F, report, raise_on_failure)

    report.add(result_from_zero_test("rigid", is_zero_on_samples(derivative(F, "v"), spec)))
    report.add(result_from_zero_test("real", is_zero_on_samples(conjugate(F) - F, spec)))

    F11b = derivative(F, "z1", "zb1")
    levi = _nonvanishing("levi_nonzero", F11b, spec)
    report.add(levi)
    if not levi.passed:
        report.add(CheckResult("rank_one", False, "not checked: Levi form vanishes"))
        report.add(CheckResult("two_nondegenerate", False, "not checked: Levi form vanishes"))
        return _finish(F, report, raise_on_failure)

    H = Hypersurface(F)
    report.add(result_from_zero_test("rank_one", is_zero_on_samples(H.levi_determinant(), spec)))
    report.add(_nonvanishing("two_nondegenerate", H.a, spec))
    H.report = report
    return _finish(F, report, raise_on_failure, H)


def _finish(F: Expr, report: ValidationReport, raise_on_failure: bool, H=None):
    if report.passed and H is not None:
        logger.info("hypersurface validated")
        return H
    logger.info("hypersurface rejected: %s", ", ".join(report.failed()))
    if raise_on_failure:
        raise HypersurfaceValidationError(report)
    return report


__all__ = [
    "HYPOTHESES",
    "Hypersurface",
    "ValidationReport",
    "b_fun",
    "levi_matrix",
    "p_fun",
    "slant_k",
    "validate",
]
