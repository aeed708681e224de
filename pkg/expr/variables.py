"""Coordinate variables and their conjugation pairing."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, FrozenSet, Tuple

from .errors import UnknownIdentifier


@dataclass(frozen=True)
class VarId:
    name: str
    partner_name: str
    real: bool = False

    @property
    def partner(self) -> "VarId":
        return VARIABLES[self.partner_name]

    def __str__(self) -> str:
        return self.name


def _pair(a: str, b: str) -> Tuple[VarId, VarId]:
    return VarId(a, b), VarId(b, a)


def _real(name: str) -> VarId:
    return VarId(name, name, real=True)


Z1, ZB1 = _pair("z1", "zb1")
Z2, ZB2 = _pair("z2", "zb2")
W, WB = _pair("w", "wb")
C, CB = _pair("c", "cb")
V = _real("v")
T = _real("t")
# Second flow parameter for group-law checks; never accepted by the DSL.
S = _real("s")
# Formal exponential parameter for flows; never accepted by the DSL.
E = _real("E")

VARIABLES: Dict[str, VarId] = {
    var.name: var for var in (Z1, ZB1, Z2, ZB2, W, WB, C, CB, V, T, S, E)
}

DSL_IDENTIFIERS: FrozenSet[str] = frozenset(
    {"z1", "z2", "zb1", "zb2", "v", "w", "wb", "c", "cb", "t"}
)

# Base coordinates of a rigid hypersurface M in C^3.
SURFACE_VARIABLES: Tuple[VarId, ...] = (Z1, Z2, ZB1, ZB2, V)
# Coordinates of the bundle M x G^2 used by the lifted derivations.
BUNDLE_VARIABLES: Tuple[VarId, ...] = SURFACE_VARIABLES + (C, CB)
# Holomorphic ambient coordinates of C^3.
AMBIENT_VARIABLES: Tuple[VarId, ...] = (Z1, Z2, W)


def var_id(name: str) -> VarId:
    try:
        return VARIABLES[name]
    except KeyError:
        raise UnknownIdentifier(f"unknown variable {name!r}", 0, name) from None


def ordering_key(var: VarId) -> Tuple[int, str]:
    """Stable order used when printing coefficient maps."""
    order = ("z1", "z2", "zb1", "zb2", "v", "w", "wb", "c", "cb", "t", "s", "E")
    return (order.index(var.name), var.name)


__all__ = [
    "AMBIENT_VARIABLES",
    "BUNDLE_VARIABLES",
    "C",
    "CB",
    "DSL_IDENTIFIERS",
    "E",
    "S",
    "SURFACE_VARIABLES",
    "T",
    "V",
    "VARIABLES",
    "VarId",
    "W",
    "WB",
    "Z1",
    "Z2",
    "ZB1",
    "ZB2",
    "ordering_key",
    "var_id",
]
