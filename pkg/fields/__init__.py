"""Vector fields, frames, coframes and two-form tables."""

from __future__ import annotations

from .forms import (
    PAIRS,
    TwoFormTable,
    bracket_expansions,
    check_structure_table,
    conjugate_table,
    cyclic_residuals,
    dcoframe_coeffs,
)
from .frames import Coframe, Frame, OneForm, expand_in_frame
from .vector_field import VectorField, combination

__all__ = [
    "Coframe",
    "Frame",
    "OneForm",
    "PAIRS",
    "TwoFormTable",
    "VectorField",
    "bracket_expansions",
    "check_structure_table",
    "combination",
    "conjugate_table",
    "cyclic_residuals",
    "dcoframe_coeffs",
    "expand_in_frame",
]
