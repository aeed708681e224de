"""
Check results and reports shared by every verification routine.

A check never raises on a failing identity: it records a ``CheckResult``
with the witness point and value. Results flagged as *findings* document
which printed variant of a formula holds; they are reported but never
make a report fail.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional

from .nodes import Expr
from .sampling import SampleSpec, ZeroTestResult, is_zero_on_samples, zero_test_many
from .scalars import Scalar, format_scalar


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str = ""
    witness: Optional[Dict[str, str]] = None
    value: Optional[str] = None
    finding: bool = False

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.detail:
            data["detail"] = self.detail
        if self.witness is not None:
            data["witness"] = self.witness
        if self.value is not None:
            data["value"] = self.value
        if self.finding:
            data["finding"] = True
        return data


@dataclass
class CheckReport:
    title: str
    results: List[CheckResult] = field(default_factory=list)
    sections: List["CheckReport"] = field(default_factory=list)
    findings: Dict[str, str] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results if not r.finding) and all(
            s.passed for s in self.sections
        )

    def add(self, result: CheckResult) -> CheckResult:
        self.results.append(result)
        return result

    def extend(self, results: List[CheckResult]) -> None:
        self.results.extend(results)

    def section(self, report: "CheckReport") -> "CheckReport":
        self.sections.append(report)
        return report

    def note(self, key: str, text: str) -> None:
        self.findings[key] = text

    def failures(self) -> List[str]:
        """Dotted names of failing non-finding leaves."""
        names = [f"{self.title}.{r.name}" for r in self.results if not r.passed and not r.finding]
        for s in self.sections:
            names.extend(f"{self.title}.{n}" for n in s.failures())
        return names

    def failed(self) -> List[str]:
        return [r.name for r in self.results if not r.passed and not r.finding]

    def leaf_count(self) -> int:
        return len(self.results) + sum(s.leaf_count() for s in self.sections)

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "title": self.title,
            "passed": self.passed,
            "results": [r.to_dict() for r in self.results],
        }
        if self.sections:
            data["sections"] = [s.to_dict() for s in self.sections]
        if self.findings:
            data["findings"] = dict(sorted(self.findings.items()))
        return data


def result_from_zero_test(
    name: str,
    outcome: ZeroTestResult,
    *,
    expect_zero: bool = True,
    finding: bool = False,
    detail: str = "",
) -> CheckResult:
    """Translate a zero test into a check result."""
    if outcome.status == "exhausted":
        return CheckResult(name, False, detail or "sampling exhausted", finding=finding)
    passed = outcome.is_zero if expect_zero else not outcome.is_zero
    witness = outcome.witness.to_dict() if outcome.witness is not None else None
    value = format_scalar(outcome.value) if outcome.value is not None else None
    return CheckResult(name, passed, detail, witness, value, finding)


def zero_check(
    name: str,
    e: Expr,
    spec: Optional[SampleSpec] = None,
    *,
    finding: bool = False,
    detail: str = "",
) -> CheckResult:
    return result_from_zero_test(name, is_zero_on_samples(e, spec), finding=finding, detail=detail)


def identity_check(
    name: str,
    lhs: Expr,
    rhs: Expr,
    spec: Optional[SampleSpec] = None,
    *,
    finding: bool = False,
    detail: str = "",
) -> CheckResult:
    return zero_check(name, lhs - rhs, spec, finding=finding, detail=detail)


def identity_checks(
    claims: Mapping[str, "tuple[Expr, Expr]"],
    spec: Optional[SampleSpec] = None,
    *,
    findings: frozenset = frozenset(),
) -> List[CheckResult]:
    """Check many ``name -> (lhs, rhs)`` claims on a shared point stream."""
    outcomes = zero_test_many({n: l - r for n, (l, r) in claims.items()}, spec)
    return [
        result_from_zero_test(n, outcomes[n], finding=n in findings) for n in claims
    ]


def value_check(name: str, actual: Scalar, expected: Scalar, detail: str = "") -> CheckResult:
    passed = actual == expected
    return CheckResult(
        name,
        passed,
        detail or ("" if passed else f"expected {format_scalar(expected)}"),
        value=format_scalar(actual),
    )


__all__ = [
    "CheckReport",
    "CheckResult",
    "identity_check",
    "identity_checks",
    "result_from_zero_test",
    "value_check",
    "zero_check",
]
