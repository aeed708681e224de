"""
Rigid holomorphic maps ``(z, w) -> (f(z), a w + g(z))`` and their action on
rigid graphs.

With ``w' = a w + g(z)`` and ``z = f^{-1}(z')`` the image of
``u = F(z, zb)`` is the rigid graph

    F'(z', zb') = a F(f^{-1}(z'), conj) + Re g(f^{-1}(z')).

Only the inverse of ``f`` is needed to transform a graph, so ``f`` itself
may be omitted when it is not rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from config.logging_setup import get_logger
from expr.calculus import conjugate, free_vars, substitute
from expr.checks import CheckReport, identity_checks
from expr.errors import RigidMapError
from expr.nodes import HALF, ZERO, Expr, as_expr, mul, var
from expr.sampling import SampleSpec
from expr.scalars import GaussianRational
from expr.variables import Z1, Z2
from hypersurface.surface import Hypersurface, validate

from .graph import graph_image

logger = get_logger(__name__)

_HOLOMORPHIC = frozenset({"z1", "z2"})


def _check_holomorphic(name: str, e: Expr) -> None:
    extra = free_vars(e) - _HOLOMORPHIC
    if extra:
        raise RigidMapError(f"{name} depends on {sorted(extra)}; only z1, z2 are allowed")


@dataclass(frozen=True)
class RigidMap:
    """``(z1, z2, w) -> (f1, f2, a w + g)`` with ``a`` real and nonzero."""

    inverse_f: Tuple[Expr, Expr]
    a: GaussianRational = GaussianRational(1)
    g: Expr = ZERO
    f: Optional[Tuple[Expr, Expr]] = None
    name: str = ""

    def __post_init__(self) -> None:
        a = GaussianRational.coerce(self.a)
        if a.is_zero() or not a.is_real():
            raise RigidMapError(f"a must be real and nonzero, got {a}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "g", as_expr(self.g))
        object.__setattr__(self, "inverse_f", tuple(as_expr(x) for x in self.inverse_f))
        _check_holomorphic("g", self.g)
        for i, h in enumerate(self.inverse_f, start=1):
            _check_holomorphic(f"inverse_f{i}", h)
        if self.f is not None:
            object.__setattr__(self, "f", tuple(as_expr(x) for x in self.f))
            for i, h in enumerate(self.f, start=1):
                _check_holomorphic(f"f{i}", h)

    @classmethod
    def identity(cls) -> "RigidMap":
        z1, z2 = var(Z1), var(Z2)
        return cls((z1, z2), f=(z1, z2), name="identity")

    def composition_report(self, spec: Optional[SampleSpec] = None) -> CheckReport:
        """``f(f^{-1}(z)) = z`` and ``f^{-1}(f(z)) = z`` on samples, when ``f`` is known."""
        report = CheckReport(f"rigid_map {self.name}".strip())
        if self.f is None:
            report.note("f", "not given; only the inverse is used")
            return report
        z = (var(Z1), var(Z2))
        forward = {"z1": self.f[0], "z2": self.f[1]}
        backward = {"z1": self.inverse_f[0], "z2": self.inverse_f[1]}
        claims = {}
        for i in range(2):
            claims[f"f(f^-1)_{i + 1}"] = (substitute(self.f[i], backward), z[i])
            claims[f"f^-1(f)_{i + 1}"] = (substitute(self.inverse_f[i], forward), z[i])
        report.extend(identity_checks(claims, spec))
        return report


def transform_graph(F: Expr, m: RigidMap) -> Expr:
    """Graphing function of the image of ``u = F`` under ``m``."""
    h1, h2 = m.inverse_f
    pulled = graph_image(F, h1, h2)
    g_pulled = substitute(m.g, {"z1": h1, "z2": h2})
    return mul(m.a, pulled) + mul(HALF, g_pulled + conjugate(g_pulled))


def transform_surface(
    H: Hypersurface, m: RigidMap, spec: Optional[SampleSpec] = None
) -> Hypersurface:
    """Image of ``H`` under ``m``, validated.

    Raises ``HypersurfaceValidationError`` when the image fails a hypothesis,
    which usually means the inverse is wrong.
    """
    logger.debug("transforming surface by rigid map %s", m.name or "<anonymous>")
    return validate(transform_graph(H.F, m), spec)


__all__ = ["RigidMap", "transform_graph", "transform_surface"]
