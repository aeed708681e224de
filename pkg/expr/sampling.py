"""Seeded random points and probabilistic zero testing.

An identity ``e == 0`` between rational expressions is accepted when ``e``
evaluates to exactly zero at every sampled Gaussian-rational point. A nonzero
rational function vanishes on a random point drawn from a box of ``N``
values per real coordinate with probability at most ``deg / N`` per point
(Schwartz-Zippel), so twenty agreeing points make an accidental pass
astronomically unlikely for the degrees met here.

Candidate points at which any negative power in the tested expression has a
zero base are rejected and redrawn; too many rejections raise
``SamplingExhausted``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from config import settings
from config.logging_setup import get_logger

from .calculus import free_vars
from .errors import DivisionByZero, SamplingExhausted
from .evaluate import Evaluator, Point
from .nodes import Expr
from .scalars import GaussianRational, Scalar, format_scalar
from .variables import VARIABLES, VarId, ordering_key

logger = get_logger(__name__)


@dataclass(frozen=True)
class SampleSpec:
    count: int = settings.SAMPLE_COUNT
    numerator_bound: int = settings.NUMERATOR_BOUND
    denominator_bound: int = settings.DENOMINATOR_BOUND
    seed: int = settings.DEFAULT_SEED
    max_rejections: int = settings.MAX_REJECTIONS_PER_POINT
    # Extra point filter on top of the automatic denominator exclusion.
    exclusion: Optional[Callable[[Point], bool]] = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if self.count < 1 or self.numerator_bound < 1 or self.denominator_bound < 1:
            raise ValueError("sample count and bounds must be positive")

    def with_seed(self, seed: int) -> "SampleSpec":
        return replace(self, seed=seed)

    def with_count(self, count: int) -> "SampleSpec":
        return replace(self, count=count)

    def with_exclusion(self, exclusion: Callable[[Point], bool]) -> "SampleSpec":
        return replace(self, exclusion=exclusion)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "count": self.count,
            "numerator_bound": self.numerator_bound,
            "denominator_bound": self.denominator_bound,
            "seed": self.seed,
        }


def _rational(rng: random.Random, spec: SampleSpec) -> Fraction:
    return Fraction(
        rng.randint(-spec.numerator_bound, spec.numerator_bound),
        rng.randint(1, spec.denominator_bound),
    )


def _representatives(variables: Iterable[str]) -> List[VarId]:
    """One variable per conjugate pair, in a stable order."""
    chosen: Dict[str, VarId] = {}
    for name in variables:
        v = VARIABLES[name]
        pair = sorted({v, v.partner}, key=ordering_key)
        chosen[pair[0].name] = pair[0]
    return sorted(chosen.values(), key=ordering_key)


class PointSampler:
    """Stream of seeded candidate points over a fixed variable set."""

    def __init__(self, variables: Iterable[str], spec: SampleSpec) -> None:
        self.spec = spec
        self.variables = _representatives(variables)
        self._rng = random.Random(spec.seed)

    def draw(self) -> Point:
        values: Dict[str, GaussianRational] = {}
        for v in self.variables:
            re = _rational(self._rng, self.spec)
            if v.real:
                values[v.name] = GaussianRational(re)
            else:
                values[v.name] = GaussianRational(re, _rational(self._rng, self.spec))
        return Point(values)


def _variable_names(exprs: Iterable[Expr], extra: Iterable[Any]) -> List[str]:
    names = set()
    for e in exprs:
        names |= free_vars(e)
    for v in extra:
        names.add(v if isinstance(v, str) else v.name)
    return sorted(names)


def sample_points(
    exprs: Sequence[Expr],
    spec: SampleSpec,
    variables: Iterable[Any] = (),
) -> List[Point]:
    """``spec.count`` points at which every expression in ``exprs`` is defined."""
    sampler = PointSampler(_variable_names(exprs, variables), spec)
    accepted: List[Point] = []
    rejected = 0
    budget = spec.count * spec.max_rejections
    while len(accepted) < spec.count:
        point = sampler.draw()
        if _admissible(point, exprs, spec):
            accepted.append(point)
            continue
        rejected += 1
        if rejected > budget:
            raise SamplingExhausted(spec.count, len(accepted), rejected)
    return accepted


def _admissible(point: Point, exprs: Sequence[Expr], spec: SampleSpec) -> bool:
    if spec.exclusion is not None and spec.exclusion(point):
        return False
    evaluator = Evaluator(point)
    try:
        for e in exprs:
            evaluator(e)
    except DivisionByZero:
        return False
    return True


@dataclass
class ZeroTestResult:
    status: str  # "zero", "nonzero" or "exhausted"
    accepted: int = 0
    rejected: int = 0
    witness: Optional[Point] = None
    value: Optional[Scalar] = None

    @property
    def is_zero(self) -> bool:
        return self.status == "zero"

    def __bool__(self) -> bool:
        return self.is_zero

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "status": self.status,
            "accepted": self.accepted,
            "rejected": self.rejected,
        }
        if self.witness is not None:
            data["witness"] = self.witness.to_dict()
        if self.value is not None:
            data["value"] = format_scalar(self.value)
        return data


def is_zero_on_samples(
    e: Expr,
    spec: Optional[SampleSpec] = None,
    variables: Iterable[Any] = (),
) -> ZeroTestResult:
    """Zero-test ``e``; stops at the first nonzero value.

    Raises ``SamplingExhausted`` when the exclusion rejects too many
    candidates.
    """
    spec = spec or SampleSpec()
    if e.is_zero():
        return ZeroTestResult("zero", accepted=spec.count)
    if e.is_const():
        return ZeroTestResult("nonzero", witness=Point({}), value=e.value)
    sampler = PointSampler(_variable_names([e], variables), spec)
    accepted = rejected = 0
    budget = spec.count * spec.max_rejections
    while accepted < spec.count:
        point = sampler.draw()
        if spec.exclusion is not None and spec.exclusion(point):
            value = None
        else:
            try:
                value = Evaluator(point)(e)
            except DivisionByZero:
                value = None
        if value is None:
            rejected += 1
            if rejected > budget:
                raise SamplingExhausted(spec.count, accepted, rejected)
            continue
        accepted += 1
        if not value.is_zero():
            logger.debug("nonzero value %s at %r", value, point)
            return ZeroTestResult("nonzero", accepted, rejected, point, value)
    return ZeroTestResult("zero", accepted, rejected)


def zero_test_many(
    named: Mapping[str, Expr],
    spec: Optional[SampleSpec] = None,
    variables: Iterable[Any] = (),
) -> Dict[str, ZeroTestResult]:
    """Zero-test several expressions on one shared point stream.

    Each expression keeps its own acceptance count; a candidate point where
    one expression is singular is skipped for that expression only.
    Exhaustion is reported as status ``exhausted`` rather than raised.
    """
    spec = spec or SampleSpec()
    results: Dict[str, ZeroTestResult] = {}
    pending: Dict[str, Expr] = {}
    for name, e in named.items():
        if e.is_zero():
            results[name] = ZeroTestResult("zero", accepted=spec.count)
        elif e.is_const():
            results[name] = ZeroTestResult("nonzero", witness=Point({}), value=e.value)
        else:
            pending[name] = e
            results[name] = ZeroTestResult("zero")
    if not pending:
        return results
    sampler = PointSampler(_variable_names(pending.values(), variables), spec)
    budget = spec.count * spec.max_rejections
    while pending:
        point = sampler.draw()
        excluded = spec.exclusion is not None and spec.exclusion(point)
        evaluator = Evaluator(point)
        for name in list(pending):
            result = results[name]
            value = None
            if not excluded:
                try:
                    value = evaluator(pending[name])
                except DivisionByZero:
                    value = None
            if value is None:
                result.rejected += 1
                if result.rejected > budget:
                    result.status = "exhausted"
                    del pending[name]
                continue
            result.accepted += 1
            if not value.is_zero():
                result.status = "nonzero"
                result.witness = point
                result.value = value
                del pending[name]
            elif result.accepted >= spec.count:
                del pending[name]
    return results


def identity_holds(
    lhs: Expr, rhs: Expr, spec: Optional[SampleSpec] = None
) -> ZeroTestResult:
    return is_zero_on_samples(lhs - rhs, spec)


__all__ = [
    "PointSampler",
    "SampleSpec",
    "ZeroTestResult",
    "identity_holds",
    "is_zero_on_samples",
    "sample_points",
    "zero_test_many",
]
