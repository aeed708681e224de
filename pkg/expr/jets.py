"""Finite-difference jets, an independent oracle for symbolic derivatives.

Expressions are rational in each variable separately, hence holomorphic in
each one when the conjugate partners are treated as independent; a central
difference along the real axis therefore approximates the Wirtinger
partial.
"""

from __future__ import annotations

from typing import Dict, Mapping, Optional, Sequence, Tuple

import mpmath

from .calculus import derivative
from .evaluate import Evaluator
from .nodes import Expr
from .scalars import ScalarMode, to_float, working_precision

DEFAULT_STEP = mpmath.mpf(2) ** -10


def finite_difference_jet(
    e: Expr,
    point: Mapping[str, object],
    orders: Mapping[str, int],
    step: Optional[mpmath.mpf] = None,
    precision: Optional[int] = None,
) -> mpmath.mpc:
    """Approximate the mixed partial of ``e`` given by ``orders`` at ``point``.

    ``point`` must assign every variable of ``e``; its values are treated as
    independent (no conjugate consistency is imposed).
    """
    prec = precision or working_precision()
    names: Tuple[str, ...] = tuple(n for n, k in orders.items() if k)
    base: Dict[str, mpmath.mpc] = {}
    with mpmath.workprec(prec):
        for name, value in point.items():
            base[name] = to_float(value)

        def f(*args: mpmath.mpc) -> mpmath.mpc:
            values = dict(base)
            values.update(zip(names, args))
            return Evaluator(values, ScalarMode.FLOAT, prec)(e)

        if not names:
            return f()
        return mpmath.diff(
            f,
            tuple(base[n] for n in names),
            tuple(orders[n] for n in names),
            h=step if step is not None else DEFAULT_STEP,
            direction=0,
        )


def symbolic_jet(e: Expr, orders: Mapping[str, int]) -> Expr:
    """The exact mixed partial matching ``finite_difference_jet``."""
    sequence = []
    for name, k in orders.items():
        sequence.extend([name] * k)
    return derivative(e, *sequence)


def jet_agrees(
    e: Expr,
    point: Mapping[str, object],
    orders: Mapping[str, int],
    rel_tol: float = 1e-3,
) -> bool:
    exact = Evaluator(point, ScalarMode.FLOAT)(symbolic_jet(e, orders))
    approx = finite_difference_jet(e, point, orders)
    scale = max(mpmath.mpf(1), abs(exact))
    return abs(exact - approx) <= rel_tol * scale


def all_orders(names: Sequence[str], max_order: int):
    """Every multi-index over ``names`` with total order 1..max_order."""

    def rec(i: int, remaining: int):
        if i == len(names):
            yield {}
            return
        for k in range(remaining + 1):
            for rest in rec(i + 1, remaining - k):
                out = {names[i]: k}
                out.update(rest)
                yield out

    for combo in rec(0, max_order):
        if sum(combo.values()):
            yield combo


__all__ = [
    "DEFAULT_STEP",
    "all_orders",
    "finite_difference_jet",
    "jet_agrees",
    "symbolic_jet",
]
