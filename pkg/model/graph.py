"""Graph of the tube over the future light cone and points on it."""

from __future__ import annotations

from typing import List, Optional

from expr.calculus import conjugate, substitute
from expr.errors import DivisionByZero, SamplingExhausted
from expr.evaluate import Evaluator, Point
from expr.nodes import HALF, ONE, Expr, mul, power, quotient, var
from expr.scalars import I
from expr.sampling import PointSampler, SampleSpec
from expr.variables import W, WB, Z1, Z2, ZB1, ZB2

z1, z2, zb1, zb2 = var(Z1), var(Z2), var(ZB1), var(ZB2)


def mlc_denominator() -> Expr:
    """``D = 1 - z2 zb2``."""
    return ONE - mul(z2, zb2)


def mlc_graph() -> Expr:
    """``u = (z1 zb1 + z1^2 zb2 / 2 + zb1^2 z2 / 2) / (1 - z2 zb2)``."""
    numerator = mul(z1, zb1) + mul(HALF, z1, z1, zb2) + mul(HALF, zb1, zb1, z2)
    return quotient(numerator, mlc_denominator())


def defining_function(F: Expr) -> Expr:
    """``r = (w + wb)/2 - F``; the hypersurface is ``r = 0``."""
    return mul(HALF, var(W) + var(WB)) - F


def unit_disc_exclusion(point: Point) -> bool:
    """Rejects points with ``|z2| >= 1``."""
    value = point["z2"]
    return value.abs2() >= 1


def on_surface_points(F: Expr, spec: SampleSpec, exclude_outside_disc: bool = True) -> List[Point]:
    """Rational ``(z1, z2, v)`` lifted to ``w = F(z, zb) + i v``.

    ``w`` is exact whenever ``F`` is defined at the sampled ``z``.
    """
    sampler = PointSampler(["z1", "z2", "v"], spec)
    points: List[Point] = []
    rejected = 0
    budget = spec.count * spec.max_rejections
    while len(points) < spec.count:
        candidate = sampler.draw()
        reason: Optional[str] = None
        if exclude_outside_disc and unit_disc_exclusion(candidate):
            reason = "outside disc"
        elif spec.exclusion is not None and spec.exclusion(candidate):
            reason = "excluded"
        if reason is None:
            try:
                u = Evaluator(candidate)(F)
            except DivisionByZero:
                reason = "singular"
        if reason is not None:
            rejected += 1
            if rejected > budget:
                raise SamplingExhausted(spec.count, len(points), rejected)
            continue
        w = u + candidate["v"] * I
        points.append(candidate.extended(w=w))
    return points


def graph_image(F: Expr, h1: Expr, h2: Expr) -> Expr:
    """``F(h1, h2, conj(h1), conj(h2))`` for holomorphic ``h1, h2``."""
    return substitute(F, {"z1": h1, "z2": h2, "zb1": conjugate(h1), "zb2": conjugate(h2)})


def tube(x1_power: int, x2_power: int) -> Expr:
    """``x1^m x2^n`` with ``x_j = Re z_j``."""
    x1 = mul(HALF, z1 + zb1)
    x2 = mul(HALF, z2 + zb2)
    return mul(power(x1, x1_power), power(x2, x2_power))


__all__ = [
    "defining_function",
    "graph_image",
    "mlc_denominator",
    "mlc_graph",
    "on_surface_points",
    "tube",
    "unit_disc_exclusion",
]
