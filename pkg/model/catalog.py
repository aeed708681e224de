"""Builtin surfaces addressable by name from the command line."""

from __future__ import annotations

from typing import Callable, Dict, List

from expr.nodes import Expr, mul, var
from expr.variables import Z1, Z2

from .graph import mlc_graph, tube
from .rigid import RigidMap, transform_graph

z1, z2 = var(Z1), var(Z2)


def shear_map() -> RigidMap:
    """``(z1, z2, w) -> (z1 + z2^2, z2, 2 w)``."""
    return RigidMap(
        (z1 - mul(z2, z2), z2), a=2, f=(z1 + mul(z2, z2), z2), name="shear"
    )


def dilation_map() -> RigidMap:
    """``(z1, z2, w) -> (z1, z2, 3 w)``."""
    return RigidMap((z1, z2), a=3, f=(z1, z2), name="dilation")


def cubic_map() -> RigidMap:
    """Inverse of ``(z1 + z1^3, z2)``; the forward map is not rational."""
    return RigidMap((z1 + mul(z1, z1, z1), z2), name="cubic")


def _tube_cone() -> Expr:
    return tube(2, -1)


def _tube_quartic() -> Expr:
    return tube(2, -1) + tube(4, -3)


CATALOG: Dict[str, Callable[[], Expr]] = {
    "mlc": mlc_graph,
    "mlc-shear": lambda: transform_graph(mlc_graph(), shear_map()),
    "mlc-dilation": lambda: transform_graph(mlc_graph(), dilation_map()),
    "mlc-cubic": lambda: transform_graph(mlc_graph(), cubic_map()),
    "tube-cone": _tube_cone,
    "tube-quartic": _tube_quartic,
}

# Expected classification of each builtin surface.
EXPECTED_VERDICTS: Dict[str, str] = {
    "mlc": "ModelEquivalent",
    "mlc-shear": "ModelEquivalent",
    "mlc-dilation": "ModelEquivalent",
    "mlc-cubic": "ModelEquivalent",
    "tube-cone": "ModelEquivalent",
    "tube-quartic": "NotModelEquivalent",
}


def catalog_names() -> List[str]:
    return sorted(CATALOG)


def builtin_surface(name: str) -> Expr:
    try:
        return CATALOG[name]()
    except KeyError:
        raise KeyError(f"unknown builtin surface {name!r}; choose from {catalog_names()}") from None


__all__ = [
    "CATALOG",
    "EXPECTED_VERDICTS",
    "builtin_surface",
    "catalog_names",
    "cubic_map",
    "dilation_map",
    "shear_map",
]
