"""Expression kernel: exact symbolic arithmetic over paired conjugate variables."""

from __future__ import annotations

from .calculus import (
    conjugate,
    derivative,
    differentiate,
    free_vars,
    is_real_expr,
    simplify_basic,
    substitute,
)
from .checks import CheckReport, CheckResult, identity_check, identity_checks, zero_check
from .errors import (
    CrCartanError,
    DivisionByZero,
    EvaluationError,
    MissingAssignment,
    ParseError,
    SamplingExhausted,
    UnknownIdentifier,
)
from .evaluate import Evaluator, Point, evaluate
from .nodes import HALF, IMAG, ONE, ZERO, Expr, add, as_expr, const, mul, neg, power, quotient, var
from .parser import parse_expr
from .printer import to_text
from .sampling import SampleSpec, ZeroTestResult, is_zero_on_samples, zero_test_many
from .scalars import GaussianRational, ScalarMode
from .variables import VARIABLES, VarId, var_id

__all__ = [
    "CheckReport",
    "CheckResult",
    "CrCartanError",
    "DivisionByZero",
    "EvaluationError",
    "Evaluator",
    "Expr",
    "GaussianRational",
    "HALF",
    "IMAG",
    "MissingAssignment",
    "ONE",
    "ParseError",
    "Point",
    "SampleSpec",
    "SamplingExhausted",
    "ScalarMode",
    "UnknownIdentifier",
    "VARIABLES",
    "VarId",
    "ZERO",
    "ZeroTestResult",
    "add",
    "as_expr",
    "conjugate",
    "const",
    "derivative",
    "differentiate",
    "evaluate",
    "free_vars",
    "identity_check",
    "identity_checks",
    "is_real_expr",
    "is_zero_on_samples",
    "mul",
    "neg",
    "parse_expr",
    "power",
    "quotient",
    "simplify_basic",
    "substitute",
    "to_text",
    "var",
    "var_id",
    "zero_check",
    "zero_test_many",
]
