"""
Primary invariants ``I0``, ``V0`` and the secondary invariant ``Q0``.

All three are rational in the 5-jet of the graphing function. With
``a = L1bar(k)`` and ``b = L1(k)``:

    I0 = -1/3 K(L1bar(a))/a^2 + 1/3 K(a) L1bar(a)/a^3
         + 2/3 L1(abar)/abar + 2/3 L1(a)/a
    V0 = -1/3 L1bar(L1bar(a))/a + 5/9 (L1bar(a)/a)^2
         - 1/9 L1bar(a) Pbar/a + 1/3 L1bar(Pbar) - 1/9 Pbar^2

(``L1(L1(kbar))/L1(kbar)`` equals ``L1(abar)/abar`` because
``L1(kbar) = abar``.) The same two functions arise as ``Z5 - conj(Z8)``
and ``Z6`` from the structure equations on the ``zeta_prime`` frame.
"""

from __future__ import annotations

from typing import Tuple

from expr.calculus import conjugate
from expr.nodes import Expr, const, mul, power, quotient
from expr.scalars import GaussianRational
from hypersurface.checks import base_torsions
from hypersurface.surface import Hypersurface


def _q(num: int, den: int = 1) -> Expr:
    return const(GaussianRational(num) / den)


def I0_expr(H: Hypersurface) -> Expr:
    def build() -> Expr:
        a, abar = H.a, H.abar
        L1bar_a = H.L1bar(a)
        return (
            mul(_q(-1, 3), quotient(H.K(L1bar_a), power(a, 2)))
            + mul(_q(1, 3), H.K(a), L1bar_a, power(a, -3))
            + mul(_q(2, 3), quotient(H.L1(abar), abar))
            + mul(_q(2, 3), quotient(H.L1(a), a))
        )

    return H.cached("I0", build)


def V0_expr(H: Hypersurface) -> Expr:
    def build() -> Expr:
        a, Pbar = H.a, H.Pbar
        ratio = quotient(H.L1bar(a), a)
        return (
            mul(_q(-1, 3), quotient(H.L1bar(H.L1bar(a)), a))
            + mul(_q(5, 9), ratio, ratio)
            - mul(_q(1, 9), ratio, Pbar)
            + mul(_q(1, 3), H.L1bar(Pbar))
            - mul(_q(1, 9), Pbar, Pbar)
        )

    return H.cached("V0", build)


def Z_route(H: Hypersurface) -> Tuple[Expr, Expr]:
    """``(Z5 - conj(Z8), Z6)`` from the closed-form torsions."""
    t = base_torsions(H)
    return t.Z5 - conjugate(t.Z8), t.Z6


def Q0_full_form(H: Hypersurface) -> Expr:
    """``1/2 (L1bar(I0) - Bbar Kbar(I0)/abar + B I0 - K(V0)/a)``."""
    I0, V0 = I0_expr(H), V0_expr(H)
    return mul(
        _q(1, 2),
        H.L1bar(I0)
        - mul(H.Bbar, quotient(H.Kbar(I0), H.abar))
        + mul(H.B, I0)
        - quotient(H.K(V0), H.a),
    )


def Q0_expr(H: Hypersurface) -> Expr:
    """Reduced form using ``Kbar(I0)/abar = -2 conj(I0)``.

    ``Q0 = 1/2 L1bar(I0) - 1/3 (P - L1(abar)/abar) conj(I0)
    - 1/6 (Pbar - L1bar(a)/a) I0 - 1/2 K(V0)/a``; real valued.
    """

    def build() -> Expr:
        I0, V0 = I0_expr(H), V0_expr(H)
        return (
            mul(_q(1, 2), H.L1bar(I0))
            - mul(_q(1, 3), H.P - quotient(H.L1(H.abar), H.abar), conjugate(I0))
            - mul(_q(1, 6), H.Pbar - quotient(H.L1bar(H.a), H.a), I0)
            - mul(_q(1, 2), quotient(H.K(V0), H.a))
        )

    return H.cached("Q0", build)


def Q0_pbar_variant(H: Hypersurface) -> Expr:
    # Pbar in place of P in front of conj(I0); differs from Q0_expr
    I0, V0 = I0_expr(H), V0_expr(H)
    return (
        mul(_q(1, 2), H.L1bar(I0))
        - mul(_q(1, 3), H.Pbar - quotient(H.L1(H.abar), H.abar), conjugate(I0))
        - mul(_q(1, 6), H.Pbar - quotient(H.L1bar(H.a), H.a), I0)
        - mul(_q(1, 2), quotient(H.K(V0), H.a))
    )


__all__ = [
    "I0_expr",
    "Q0_expr",
    "Q0_pbar_variant",
    "Q0_full_form",
    "V0_expr",
    "Z_route",
]
