"""
Infinitesimal symmetries of the light-cone tube model.

``X1..X10`` are holomorphic vector fields on ``(z1, z2, w)``; their real
parts are tangent to the model. ``X1..X7`` preserve rigidity and span the
rigid automorphism algebra.
"""

from __future__ import annotations

from itertools import combinations
from typing import Dict, List, Mapping, Optional, Tuple

from config.logging_setup import get_logger
from expr.calculus import differentiate
from expr.checks import CheckReport, CheckResult
from expr.errors import EvaluationError
from expr.evaluate import Evaluator
from expr.linalg import determinant
from expr.nodes import IMAG, Expr, mul, var
from expr.polynomial import polynomials_equal
from expr.printer import to_text
from expr.sampling import SampleSpec
from expr.scalars import format_scalar
from expr.variables import W, Z1, Z2
from fields.vector_field import VectorField, combination
from liealg.algebra import (
    LieAlgebraSC,
    LinearMap,
    center,
    isomorphism_check,
    jacobi_check,
    killing_form,
)
from liealg.maurer_cartan import expected_w_algebra, w_algebra

from .graph import defining_function, mlc_graph, on_surface_points

logger = get_logger(__name__)

LABELS: Tuple[str, ...] = tuple(f"X{i}" for i in range(1, 11))
RIGID_LABELS: Tuple[str, ...] = LABELS[:7]

z1, z2, w = var(Z1), var(Z2), var(W)
i = IMAG


def _field(dz1: object = 0, dz2: object = 0, dw: object = 0) -> VectorField:
    return VectorField({"z1": dz1, "z2": dz2, "w": dw})


def infinitesimal_fields() -> Dict[str, VectorField]:
    """The ten holomorphic generators, keyed ``X1``..``X10``."""
    return {
        "X1": _field(dw=i),
        "X2": _field(z1, 0, mul(2, w)),
        "X3": _field(mul(i, z1), mul(2, i, z2)),
        "X4": _field(z2 - 1, 0, mul(-2, z1)),
        "X5": _field(mul(i, z2) + i, 0, mul(-2, i, z1)),
        "X6": _field(mul(z1, z2), mul(z2, z2) - 1, -mul(z1, z1)),
        "X7": _field(mul(i, z1, z2), mul(i, z2, z2) + i, -mul(i, z1, z1)),
        "X8": _field(mul(i, w, z1), -mul(i, z1, z1), mul(i, w, w)),
        "X9": _field(
            mul(z1, z1) - mul(w, z2) - w,
            mul(2, z1, z2) + mul(2, z1),
            mul(2, w, z1),
        ),
        "X10": _field(
            -mul(i, z1, z1) + mul(i, w, z2) - mul(i, w),
            -mul(2, i, z1, z2) + mul(2, i, z1),
            mul(-2, i, w, z1),
        ),
    }


# Upper triangle of the commutator table; pairs not listed commute.
TABLE: Dict[Tuple[str, str], Dict[str, int]] = {
    ("X1", "X2"): {"X1": 2},
    ("X1", "X8"): {"X2": -1},
    ("X1", "X9"): {"X5": -1},
    ("X1", "X10"): {"X4": -1},
    ("X2", "X4"): {"X4": -1},
    ("X2", "X5"): {"X5": -1},
    ("X2", "X8"): {"X8": 2},
    ("X2", "X9"): {"X9": 1},
    ("X2", "X10"): {"X10": 1},
    ("X3", "X4"): {"X5": 1},
    ("X3", "X5"): {"X4": -1},
    ("X3", "X6"): {"X7": 2},
    ("X3", "X7"): {"X6": -2},
    ("X3", "X9"): {"X10": -1},
    ("X3", "X10"): {"X9": 1},
    ("X4", "X5"): {"X1": 4},
    ("X4", "X6"): {"X4": -1},
    ("X4", "X7"): {"X5": -1},
    ("X4", "X8"): {"X10": 1},
    ("X4", "X9"): {"X6": 2, "X2": -2},
    ("X4", "X10"): {"X7": -2, "X3": 2},
    ("X5", "X6"): {"X5": 1},
    ("X5", "X7"): {"X4": -1},
    ("X5", "X8"): {"X9": 1},
    ("X5", "X9"): {"X7": 2, "X3": 2},
    ("X5", "X10"): {"X6": 2, "X2": 2},
    ("X6", "X7"): {"X3": -2},
    ("X6", "X9"): {"X9": -1},
    ("X6", "X10"): {"X10": 1},
    ("X7", "X9"): {"X10": 1},
    ("X7", "X10"): {"X9": 1},
    ("X9", "X10"): {"X8": 4},
}


def table_entry(x: str, y: str) -> Dict[str, int]:
    if (x, y) in TABLE:
        return dict(TABLE[(x, y)])
    if (y, x) in TABLE:
        return {k: -c for k, c in TABLE[(y, x)].items()}
    return {}


def table_algebra() -> LieAlgebraSC:
    return LieAlgebraSC.from_brackets(LABELS, TABLE)


def restrict(A: LieAlgebraSC, labels: Tuple[str, ...]) -> LieAlgebraSC:
    """Subalgebra spanned by the named basis vectors; raises if not closed."""
    idx = [A.index(label) for label in labels]
    if not A.subalgebra_closed(idx):
        raise ValueError(f"{labels} do not span a subalgebra")
    constants = [[[A.constants[j][k][m] for m in idx] for k in idx] for j in idx]
    return LieAlgebraSC(labels, constants)


def rigid_algebra() -> LieAlgebraSC:
    return restrict(table_algebra(), RIGID_LABELS)


def _fields_equal(a: VectorField, b: VectorField) -> Optional[str]:
    """Name of the first coefficient where ``a`` and ``b`` differ, or None."""
    for x in ("z1", "z2", "w"):
        if not polynomials_equal(a[x], b[x]):
            return x
    return None


def commutator_table_check(fields: Optional[Mapping[str, VectorField]] = None) -> CheckReport:
    """Every ``[Xi, Xj]`` equals its tabulated combination as polynomials."""
    fields = dict(fields or infinitesimal_fields())
    report = CheckReport("commutators")
    for x, y in combinations(LABELS, 2):
        entry = table_entry(x, y)
        expected = combination(entry.values(), [fields[k] for k in entry])
        got = fields[x].bracket(fields[y])
        name = f"[{x},{y}]"
        bad = _fields_equal(got, expected)
        if bad is None:
            report.add(CheckResult(name, True))
        else:
            logger.info("commutator %s differs in d/d%s", name, bad)
            report.add(
                CheckResult(name, False, f"coefficient of d/d{bad} differs", value=to_text(got[bad]))
            )
    return report


def tangency_expression(X: VectorField, F: Expr) -> Expr:
    """``(X + conj X)(r)`` for the defining function ``r`` of ``u = F``."""
    real_part = X + X.conjugate()
    return real_part.apply(defining_function(F))


def tangency_check(
    spec: SampleSpec,
    F: Optional[Expr] = None,
    fields: Optional[Mapping[str, VectorField]] = None,
) -> CheckReport:
    """``Re Xi`` is tangent to ``u = F`` at exact points of the surface."""
    F = mlc_graph() if F is None else F
    fields = dict(fields or infinitesimal_fields())
    points = on_surface_points(F, spec)
    report = CheckReport("tangency")
    for label, X in fields.items():
        e = tangency_expression(X, F)
        failure: Optional[CheckResult] = None
        for p in points:
            try:
                value = Evaluator(p)(e)
            except EvaluationError as exc:
                failure = CheckResult(label, False, str(exc), witness=p.to_dict())
                break
            if not value.is_zero():
                failure = CheckResult(
                    label, False, "not tangent", witness=p.to_dict(), value=format_scalar(value)
                )
                break
        report.add(failure or CheckResult(label, True, f"{len(points)} points"))
    return report


def rigid_isomorphism_check() -> CheckReport:
    """``Xi -> Wi`` identifies the rigid algebra with the Maurer-Cartan dual."""
    report = CheckReport("rigid_isomorphism")
    rigid = rigid_algebra()
    report.section(isomorphism_check(rigid, expected_w_algebra(), LinearMap.identity(7), "x_to_w_table"))
    report.section(isomorphism_check(rigid, w_algebra(), LinearMap.identity(7), "x_to_w_dual"))
    return report


def algebra_structure_check() -> CheckReport:
    """Jacobi, closure, Killing form and center of the tabulated algebra."""
    report = CheckReport("algebra")
    full = table_algebra()
    jac = jacobi_check(full)
    jac.title = "jacobi"
    report.section(jac)
    report.add(
        CheckResult(
            "X1..X7 closed",
            full.subalgebra_closed(list(range(7))),
        )
    )
    det = determinant(killing_form(full))
    report.add(CheckResult("killing nondegenerate", not det.is_zero(), value=format_scalar(det)))
    rigid = rigid_algebra()
    k = killing_form(rigid)
    report.add(
        CheckResult(
            "rigid killing row X1 zero",
            all(c.is_zero() for c in k[0]),
            value=", ".join(format_scalar(c) for c in k[0]),
        )
    )
    z = center(rigid)
    report.add(CheckResult("rigid center trivial", not z, value=str(len(z))))
    return report


def rigidity_check(fields: Optional[Mapping[str, VectorField]] = None) -> List[CheckResult]:
    """``X1..X7`` have ``d/dz`` parts free of ``w`` and ``d/dw`` part affine in ``w``."""
    fields = dict(fields or infinitesimal_fields())
    out: List[CheckResult] = []
    for label in LABELS:
        X = fields[label]
        holomorphic_part_free = all(differentiate(X[x], "w").is_zero() for x in ("z1", "z2"))
        dw = differentiate(X["w"], "w")
        affine = differentiate(dw, "w").is_zero() and all(
            differentiate(dw, x).is_zero() for x in ("z1", "z2")
        )
        rigid = holomorphic_part_free and affine
        out.append(CheckResult(label, rigid == (label in RIGID_LABELS), "rigid" if rigid else "not rigid"))
    return out


def symmetries_suite(spec: SampleSpec) -> CheckReport:
    report = CheckReport("symmetries")
    report.section(commutator_table_check())
    report.section(tangency_check(spec))
    rigid = CheckReport("rigidity")
    rigid.extend(rigidity_check())
    report.section(rigid)
    report.section(algebra_structure_check())
    report.section(rigid_isomorphism_check())
    return report


__all__ = [
    "LABELS",
    "RIGID_LABELS",
    "TABLE",
    "algebra_structure_check",
    "commutator_table_check",
    "infinitesimal_fields",
    "restrict",
    "rigid_algebra",
    "rigid_isomorphism_check",
    "rigidity_check",
    "symmetries_suite",
    "table_algebra",
    "table_entry",
    "tangency_check",
    "tangency_expression",
]
