"""Verification suites addressable by ``verify --suite``."""

from __future__ import annotations

from typing import Callable, Dict, Optional

from config.logging_setup import get_logger
from expr.checks import CheckReport
from expr.sampling import SampleSpec
from hypersurface.checks import check_bracket_identities, check_lemma_identities, structure_suite
from hypersurface.surface import Hypersurface
from invariants.identities import invariants_suite
from liealg.maurer_cartan import liealg_suite
from model.suite import model_suite
from model.symmetries import algebra_structure_check, rigid_isomorphism_check

logger = get_logger(__name__)

SuiteRunner = Callable[[Optional[Hypersurface], SampleSpec, int], CheckReport]

# Suites that need a validated surface.
SURFACE_SUITES = ("brackets", "structure", "lemmas", "invariants")


def _brackets(H, spec, orientation):
    return check_bracket_identities(H, spec, orientation)


def _structure(H, spec, orientation):
    return structure_suite(H, spec, orientation)


def _lemmas(H, spec, orientation):
    return check_lemma_identities(H, spec, orientation)


def _invariants(H, spec, orientation):
    return invariants_suite(H, spec)


def _model(H, spec, orientation):
    return model_suite(spec)


def _liealg(H, spec, orientation):
    report = liealg_suite()
    report.section(rigid_isomorphism_check())
    report.section(algebra_structure_check())
    return report


SUITES: Dict[str, SuiteRunner] = {
    "brackets": _brackets,
    "structure": _structure,
    "lemmas": _lemmas,
    "invariants": _invariants,
    "model": _model,
    "liealg": _liealg,
}


def run_suite(
    name: str,
    H: Optional[Hypersurface],
    spec: SampleSpec,
    orientation: int = 1,
) -> CheckReport:
    """Run one suite, or every suite for ``all``."""
    if name == "all":
        report = CheckReport("all")
        for key in SUITES:
            if key in SURFACE_SUITES and H is None:
                continue
            report.section(run_suite(key, H, spec, orientation))
        return report
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    if name in SURFACE_SUITES and H is None:
        raise ValueError(f"suite {name!r} needs a surface")
    logger.info("running suite %s", name)
    return SUITES[name](H, spec, orientation)


__all__ = ["SUITES", "SURFACE_SUITES", "run_suite"]
