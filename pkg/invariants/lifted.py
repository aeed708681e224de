"""
Derivations dual to the lifted coframe on ``M x G`` with group parameter ``c``.

The lifted coframe is ``rho = c cbar rho0``, ``kappa = c kappa0``,
``zeta = (c/cbar) zeta_prime`` with the absorbed connection form. Writing
``f1 = L1 - (B/a) K`` and ``f2 = K/a`` for the ``zeta_prime`` frame,

* ``d_alpha = c d/dc``,
* ``d_rho = T / (c cbar)``,
* ``d_kappa = f1/c + (R1 + Bbar) d/dc - Bbar (cbar/c) d/dcbar``,
* ``d_zeta = (cbar/c) f2 - cbar (b/a) d/dc``,

with ``d_kappabar``, ``d_zetabar``, ``d_alphabar`` their conjugates.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

from expr.nodes import Expr, mul, neg, quotient, var
from expr.variables import C, CB
from fields.vector_field import VectorField
from hypersurface.checks import base_torsions
from hypersurface.frames import frame, prime_frame
from hypersurface.surface import Hypersurface

# Possible group weights of V0 in S6; only cbar2 is compatible with the lifted frame.
S6_WEIGHTS = ("c2", "c_cbar", "cbar2")


@dataclass(frozen=True)
class LiftedDerivations:
    d_rho: VectorField
    d_kappa: VectorField
    d_zeta: VectorField
    d_alpha: VectorField
    d_kappabar: VectorField
    d_zetabar: VectorField
    d_alphabar: VectorField

    def as_dict(self) -> Dict[str, VectorField]:
        return {
            "rho": self.d_rho,
            "kappa": self.d_kappa,
            "zeta": self.d_zeta,
            "alpha": self.d_alpha,
            "kappabar": self.d_kappabar,
            "zetabar": self.d_zetabar,
            "alphabar": self.d_alphabar,
        }


def lifted_derivatives(H: Hypersurface) -> LiftedDerivations:
    def build() -> LiftedDerivations:
        c, cb = var(C), var(CB)
        t = base_torsions(H)
        adapted = prime_frame(H)
        f1, f2 = adapted[1], adapted[2]
        T = frame(H)["T"]

        d_alpha = VectorField({"c": c})
        d_rho = T.scale(quotient(1, mul(c, cb)))
        d_kappa = f1.scale(quotient(1, c)) + VectorField(
            {"c": t.R1 + H.Bbar, "cb": neg(mul(H.Bbar, quotient(cb, c)))}
        )
        d_zeta = f2.scale(quotient(cb, c)) + VectorField(
            {"c": neg(mul(cb, quotient(H.b, H.a)))}
        )
        return LiftedDerivations(
            d_rho=d_rho,
            d_kappa=d_kappa,
            d_zeta=d_zeta,
            d_alpha=d_alpha,
            d_kappabar=d_kappa.conjugate(),
            d_zetabar=d_zeta.conjugate(),
            d_alphabar=d_alpha.conjugate(),
        )

    return H.cached("lifted", build)


def S5(I0: Expr) -> Expr:
    return quotient(I0, var(C))


def S6(V0: Expr, weight: str = "cbar2") -> Expr:
    """``V0`` divided by ``c^2``, ``c cbar`` or ``cbar^2``."""
    c, cb = var(C), var(CB)
    denominators = {"c2": mul(c, c), "c_cbar": mul(c, cb), "cbar2": mul(cb, cb)}
    try:
        return quotient(V0, denominators[weight])
    except KeyError:
        raise ValueError(f"unknown S6 weight {weight!r}; expected one of {S6_WEIGHTS}") from None


__all__ = ["LiftedDerivations", "S5", "S6", "S6_WEIGHTS", "lifted_derivatives"]
