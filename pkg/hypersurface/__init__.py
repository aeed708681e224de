"""Validated rigid hypersurfaces, their adapted frames and structure checks."""

from __future__ import annotations

from .checks import (
    BaseTorsions,
    base_torsions,
    check_bracket_identities,
    check_duality,
    check_lemma_identities,
    check_structure_final_base,
    check_structure_initial,
    structure_suite,
)
from .frames import (
    COFRAME_NAMES,
    FRAME_NAMES,
    AdaptedCoframes,
    adapted_coframes,
    coframe,
    frame,
    hat_frame,
    prime_frame,
)
from .surface import (
    HYPOTHESES,
    Hypersurface,
    ValidationReport,
    b_fun,
    levi_matrix,
    p_fun,
    slant_k,
    validate,
)

__all__ = [
    "AdaptedCoframes",
    "BaseTorsions",
    "COFRAME_NAMES",
    "FRAME_NAMES",
    "HYPOTHESES",
    "Hypersurface",
    "ValidationReport",
    "adapted_coframes",
    "b_fun",
    "base_torsions",
    "check_bracket_identities",
    "check_duality",
    "check_lemma_identities",
    "check_structure_final_base",
    "check_structure_initial",
    "coframe",
    "frame",
    "hat_frame",
    "levi_matrix",
    "p_fun",
    "prime_frame",
    "slant_k",
    "structure_suite",
    "validate",
]
