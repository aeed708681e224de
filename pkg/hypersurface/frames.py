"""
Adapted frames and coframes of a validated hypersurface.

The base frame is ``(T, L1, K, L1bar, Kbar)`` with

* ``L1 = d/dz1 - i F_z1 d/dv`` and ``L2 = d/dz2 - i F_z2 d/dv``,
* ``K = k L1 + L2`` spanning the Levi kernel,
* ``T = orientation * ell * d/dv``.

``orientation = +1`` gives ``[L1, L1bar] = i T``; ``orientation = -1`` gives
the opposite sign of ``T`` and of ``rho``. Every other bracket and torsion
is independent of it.

Two derived frames follow the changes of base coframe
``zeta_hat = L1bar(k) zeta`` and ``zeta_prime = zeta_hat + B kappa``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict

from expr.nodes import IMAG, ONE, ZERO, Expr, mul, neg, quotient
from expr.calculus import derivative
from fields.frames import Coframe, Frame, OneForm
from fields.vector_field import VectorField

from .surface import Hypersurface

FRAME_NAMES = ("T", "L1", "K", "L1bar", "Kbar")
HAT_FRAME_NAMES = ("T", "L1", "Khat", "L1bar", "Khatbar")
PRIME_FRAME_NAMES = ("T", "L1prime", "Kprime", "L1primebar", "Kprimebar")
COFRAME_NAMES = ("rho", "kappa", "zeta", "kappabar", "zetabar")

# frame index -> index of the conjugate field
CONJUGATION = (0, 3, 4, 1, 2)


def _check_orientation(orientation: int) -> int:
    if orientation not in (1, -1):
        raise ValueError("orientation must be +1 or -1")
    return orientation


def frame(H: Hypersurface, orientation: int = 1) -> Frame:
    """Base frame ``(T, L1, K, L1bar, Kbar)``."""
    sigma = _check_orientation(orientation)

    def build() -> Frame:
        F = H.F
        L1 = VectorField({"z1": ONE, "v": mul(neg(IMAG), derivative(F, "z1"))})
        L2 = VectorField({"z2": ONE, "v": mul(neg(IMAG), derivative(F, "z2"))})
        K = L1.scale(H.k) + L2
        T = VectorField({"v": mul(sigma, H.ell)})
        fields = (T, L1, K, L1.conjugate(), K.conjugate())
        return Frame(FRAME_NAMES, fields, CONJUGATION)

    return H.cached(("frame", sigma), build)


def coframe(H: Hypersurface, orientation: int = 1) -> Coframe:
    """Coframe ``(rho0, kappa0, zeta0, kappabar0, zetabar0)`` dual to ``frame``."""
    sigma = _check_orientation(orientation)

    def build() -> Coframe:
        F = H.F
        theta = OneForm.of(
            {
                "v": ONE,
                "z1": mul(IMAG, derivative(F, "z1")),
                "z2": mul(IMAG, derivative(F, "z2")),
                "zb1": mul(neg(IMAG), derivative(F, "zb1")),
                "zb2": mul(neg(IMAG), derivative(F, "zb2")),
            }
        )
        rho = theta.scale(quotient(sigma, H.ell))
        kappa = OneForm.of({"z1": ONE, "z2": neg(H.k)})
        zeta = OneForm.of({"z2": ONE})
        return Coframe(COFRAME_NAMES, (rho, kappa, zeta, kappa.conjugate(), zeta.conjugate()))

    return H.cached(("coframe", sigma), build)


def _shifted_frame(
    H: Hypersurface, names, shift: Expr, shift_bar: Expr, orientation: int
) -> Frame:
    # f1 = L1 - (shift/a) K, f2 = K/a and conjugates; L1 = f1 + shift f2, K = a f2
    base = frame(H, orientation)
    a, abar = H.a, H.abar
    inv_a, inv_abar = quotient(ONE, a), quotient(ONE, abar)
    rows = (
        (ONE, ZERO, ZERO, ZERO, ZERO),
        (ZERO, ONE, neg(mul(shift, inv_a)), ZERO, ZERO),
        (ZERO, ZERO, inv_a, ZERO, ZERO),
        (ZERO, ZERO, ZERO, ONE, neg(mul(shift_bar, inv_abar))),
        (ZERO, ZERO, ZERO, ZERO, inv_abar),
    )
    parent_rows = (
        (ONE, ZERO, ZERO, ZERO, ZERO),
        (ZERO, ONE, shift, ZERO, ZERO),
        (ZERO, ZERO, a, ZERO, ZERO),
        (ZERO, ZERO, ZERO, ONE, shift_bar),
        (ZERO, ZERO, ZERO, ZERO, abar),
    )
    return base.derived(names, rows, parent_rows)


def hat_frame(H: Hypersurface, orientation: int = 1) -> Frame:
    """Frame dual to ``(rho0, kappa0, zeta_hat, ...)``."""
    sigma = _check_orientation(orientation)
    return H.cached(("hat", sigma), lambda: _shifted_frame(H, HAT_FRAME_NAMES, ZERO, ZERO, sigma))


def prime_frame(H: Hypersurface, orientation: int = 1) -> Frame:
    """Frame dual to ``(rho0, kappa0, zeta_prime, ...)``."""
    sigma = _check_orientation(orientation)
    return H.cached(
        ("prime", sigma), lambda: _shifted_frame(H, PRIME_FRAME_NAMES, H.B, H.Bbar, sigma)
    )


@dataclass(frozen=True)
class AdaptedCoframes:
    zeta_hat: OneForm
    zeta_prime: OneForm
    hat: Coframe
    prime: Coframe
    hat_frame: Frame
    prime_frame: Frame

    def to_dict(self) -> Dict[str, Dict[str, str]]:
        return {"zeta_hat": self.zeta_hat.to_dict(), "zeta_prime": self.zeta_prime.to_dict()}


def adapted_coframes(H: Hypersurface, orientation: int = 1) -> AdaptedCoframes:
    """The coframe changes ``zeta_hat = a zeta0`` and ``zeta_prime = zeta_hat + B kappa0``."""
    sigma = _check_orientation(orientation)

    def build() -> AdaptedCoframes:
        base = coframe(H, sigma)
        rho, kappa = base["rho"], base["kappa"]
        zeta_hat = base["zeta"].scale(H.a)
        zeta_prime = zeta_hat + kappa.scale(H.B)
        hat = Coframe(
            COFRAME_NAMES, (rho, kappa, zeta_hat, kappa.conjugate(), zeta_hat.conjugate())
        )
        prime = Coframe(
            COFRAME_NAMES, (rho, kappa, zeta_prime, kappa.conjugate(), zeta_prime.conjugate())
        )
        return AdaptedCoframes(
            zeta_hat, zeta_prime, hat, prime, hat_frame(H, sigma), prime_frame(H, sigma)
        )

    return H.cached(("adapted", sigma), build)


__all__ = [
    "AdaptedCoframes",
    "COFRAME_NAMES",
    "CONJUGATION",
    "FRAME_NAMES",
    "HAT_FRAME_NAMES",
    "PRIME_FRAME_NAMES",
    "adapted_coframes",
    "coframe",
    "frame",
    "hat_frame",
    "prime_frame",
]
