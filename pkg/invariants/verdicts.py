"""
Rigid equivalence to the light-cone model and pointwise invariant values.

A hypersurface is rigidly equivalent to the model exactly when ``I0`` and
``V0`` both vanish identically. Sampling cannot certify an identity, so the
verdict is three-valued: zero at every sample, an exact nonzero witness, or
inconclusive when sampling runs out of admissible points.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Union

from config import settings
from config.logging_setup import get_logger
from expr.errors import EvaluationError
from expr.evaluate import Evaluator, Point
from expr.nodes import Expr
from expr.sampling import SampleSpec, zero_test_many
from expr.scalars import Scalar, ScalarMode, conjugate_scalar, format_scalar, is_close, scalar_is_zero
from hypersurface.surface import Hypersurface

from .primary import I0_expr, Q0_expr, V0_expr, Z_route

logger = get_logger(__name__)

# Domain quantities that must not vanish at an admissible point.
NONDEGENERATE = ("F11b", "a")


class Verdict(str, Enum):
    MODEL_EQUIVALENT = "ModelEquivalent"
    NOT_MODEL_EQUIVALENT = "NotModelEquivalent"
    INCONCLUSIVE = "Inconclusive"


@dataclass
class ClassificationVerdict:
    verdict: Verdict
    sample: SampleSpec
    invariant: Optional[str] = None
    witness: Optional[Dict[str, str]] = None
    value: Optional[str] = None
    evidence: Dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "verdict": self.verdict.value,
            "sample": self.sample.to_dict(),
            "evidence": self.evidence,
        }
        if self.invariant is not None:
            data["invariant"] = self.invariant
            data["witness"] = self.witness
            data["value"] = self.value
        return data


def classify(
    H: Hypersurface,
    spec: Optional[SampleSpec] = None,
    perturb_i0: Optional[Expr] = None,
) -> ClassificationVerdict:
    """Zero-test ``I0`` and ``V0``.

    Parameters
    ----------
    H:
        Validated hypersurface.
    spec:
        Sampling parameters; recorded in the verdict.
    perturb_i0:
        Added to ``I0`` before testing. Only used to exercise the
        non-equivalent branch.
    """
    spec = spec or SampleSpec()
    I0 = I0_expr(H)
    if perturb_i0 is not None:
        I0 = I0 + perturb_i0
    outcomes = zero_test_many({"I0": I0, "V0": V0_expr(H)}, spec)
    evidence = {name: outcome.to_dict() for name, outcome in outcomes.items()}

    for name in ("I0", "V0"):
        outcome = outcomes[name]
        if outcome.status == "nonzero":
            logger.info("%s nonzero at %r: not model equivalent", name, outcome.witness)
            return ClassificationVerdict(
                Verdict.NOT_MODEL_EQUIVALENT,
                spec,
                invariant=name,
                witness=outcome.witness.to_dict(),
                value=format_scalar(outcome.value),
                evidence=evidence,
            )
    if any(o.status == "exhausted" for o in outcomes.values()):
        logger.info("sampling exhausted during classification")
        return ClassificationVerdict(Verdict.INCONCLUSIVE, spec, evidence=evidence)
    logger.info("I0 and V0 vanish at every sample")
    return ClassificationVerdict(Verdict.MODEL_EQUIVALENT, spec, evidence=evidence)


@dataclass
class InvariantValues:
    point: Point
    I0: Scalar
    V0: Scalar
    Q0: Scalar
    I0_via_Z: Scalar
    V0_via_Z: Scalar
    q0_real: bool

    def deltas(self) -> Dict[str, Scalar]:
        return {"I0": self.I0 - self.I0_via_Z, "V0": self.V0 - self.V0_via_Z}

    def to_dict(self) -> Dict[str, Any]:
        return {
            "point": self.point.to_dict(),
            "I0": format_scalar(self.I0),
            "V0": format_scalar(self.V0),
            "Q0": format_scalar(self.Q0),
            "cross_route_delta": {k: format_scalar(v) for k, v in self.deltas().items()},
            "Q0_real": self.q0_real,
        }


@dataclass
class PointError:
    point: Point
    message: str

    def to_dict(self) -> Dict[str, Any]:
        return {"point": self.point.to_dict(), "error": self.message}


def _degenerate(evaluator: Evaluator, domain: Dict[str, Expr]) -> Optional[str]:
    """Name of the first ``NONDEGENERATE`` quantity that vanishes at the point."""
    for name, e in domain.items():
        if scalar_is_zero(evaluator(e)) and name in NONDEGENERATE:
            return name
    return None


def invariants_at(
    H: Hypersurface,
    points: Sequence[Point],
    mode: Union[ScalarMode, str] = ScalarMode.EXACT,
) -> List[Union[InvariantValues, PointError]]:
    """``I0, V0, Q0`` and the cross-route values at each point.

    Singular or incomplete points give a ``PointError`` instead of aborting the batch.
    """
    mode = ScalarMode(mode)
    exprs = {"I0": I0_expr(H), "V0": V0_expr(H), "Q0": Q0_expr(H)}
    exprs["I0_via_Z"], exprs["V0_via_Z"] = Z_route(H)
    domain = H.domain_quantities()
    out: List[Union[InvariantValues, PointError]] = []
    for point in points:
        evaluator = Evaluator(point, mode)
        try:
            degenerate = _degenerate(evaluator, domain)
            values = {} if degenerate else {name: evaluator(e) for name, e in exprs.items()}
        except EvaluationError as exc:
            logger.info("invariants undefined at %r", point)
            out.append(PointError(point, str(exc)))
            continue
        if degenerate:
            logger.info("surface degenerate at %r", point)
            out.append(PointError(point, f"degenerate point: {degenerate} vanishes"))
            continue
        q0 = values["Q0"]
        if mode is ScalarMode.EXACT:
            real = q0 == conjugate_scalar(q0)
        else:
            real = is_close(q0, conjugate_scalar(q0), settings.FLOAT_TOLERANCE)
        out.append(InvariantValues(point, q0_real=real, **values))
    return out


__all__ = [
    "ClassificationVerdict",
    "InvariantValues",
    "NONDEGENERATE",
    "PointError",
    "Verdict",
    "classify",
    "invariants_at",
]
