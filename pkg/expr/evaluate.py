"""Points and evaluation of expressions in exact or float mode."""

from __future__ import annotations

from typing import Any, Dict, Iterator, Mapping, Optional, Union

import mpmath

from .errors import DivisionByZero, EvaluationError, MissingAssignment
from .nodes import Const, Expr, Neg, Power, Product, Sum, Var
from .scalars import (
    GaussianRational,
    Scalar,
    ScalarMode,
    conjugate_scalar,
    format_scalar,
    scalar_is_zero,
    working_precision,
)
from .variables import VARIABLES, VarId, ordering_key


def _coerce_scalar(value: Any) -> Scalar:
    if isinstance(value, (GaussianRational, mpmath.mpc)):
        return value
    if isinstance(value, mpmath.mpf):
        return mpmath.mpc(value)
    if isinstance(value, str):
        from .parser import parse_expr

        node = parse_expr(value)
        if type(node) is not Const:
            raise EvaluationError(f"point value {value!r} is not a constant")
        return node.value
    return GaussianRational.coerce(value)


def _same(a: Scalar, b: Scalar) -> bool:
    if isinstance(a, GaussianRational) and isinstance(b, GaussianRational):
        return a == b
    return mpmath.almosteq(mpmath.mpc(_as_mpc(a)), mpmath.mpc(_as_mpc(b)))


def _as_mpc(value: Scalar) -> mpmath.mpc:
    if isinstance(value, GaussianRational):
        return value.to_mpc()
    return mpmath.mpc(value)


class Point(Mapping[str, Scalar]):
    """A conjugate-consistent assignment of scalars to variables.

    Missing partners are filled with the conjugate value; supplying both a
    variable and its partner with inconsistent values is an error, as is a
    non-real value for a real variable.
    """

    __slots__ = ("_values",)

    def __init__(self, values: Mapping[Union[str, VarId], Any]) -> None:
        raw: Dict[str, Scalar] = {}
        for key, value in values.items():
            name = key if isinstance(key, str) else key.name
            if name not in VARIABLES:
                raise EvaluationError(f"unknown variable {name!r} in point")
            raw[name] = _coerce_scalar(value)
        filled: Dict[str, Scalar] = dict(raw)
        for name, value in raw.items():
            v = VARIABLES[name]
            if v.real:
                if isinstance(value, GaussianRational):
                    if not value.is_real():
                        raise EvaluationError(f"real variable {name} given {value}")
                elif mpmath.im(value) != 0:
                    raise EvaluationError(f"real variable {name} given a complex value")
                continue
            partner = v.partner_name
            expected = conjugate_scalar(value)
            if partner in raw:
                if not _same(raw[partner], expected):
                    raise EvaluationError(
                        f"{name} and {partner} are not complex conjugates"
                    )
            else:
                filled[partner] = expected
        self._values = filled

    def __getitem__(self, name: str) -> Scalar:
        return self._values[name]

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._values, key=lambda n: ordering_key(VARIABLES[n])))

    def __len__(self) -> int:
        return len(self._values)

    def extended(self, **values: Any) -> "Point":
        merged: Dict[str, Any] = {
            n: v for n, v in self._values.items() if n not in values
            and VARIABLES[n].partner_name not in values
        }
        merged.update(values)
        return Point(merged)

    def key(self) -> tuple:
        return tuple((n, str(self._values[n])) for n in self)

    def to_dict(self) -> Dict[str, str]:
        return {n: format_scalar(self._values[n]) for n in self}

    def __repr__(self) -> str:
        inner = ", ".join(f"{n}={format_scalar(v)}" for n, v in self.to_dict().items())
        return f"Point({inner})"


class Evaluator:
    """Evaluates many expressions at one assignment, sharing a node memo.

    ``assignment`` may be a ``Point`` or any raw mapping; raw mappings are
    used as formal assignments and are not checked for conjugate
    consistency.
    """

    def __init__(
        self,
        assignment: Mapping[str, Any],
        mode: Union[ScalarMode, str] = ScalarMode.EXACT,
        precision: Optional[int] = None,
    ) -> None:
        self.mode = ScalarMode(mode)
        self.precision = precision or working_precision()
        values: Dict[str, Scalar] = {}
        for key, value in assignment.items():
            name = key if isinstance(key, str) else key.name
            values[name] = _coerce_scalar(value)
        if self.mode is ScalarMode.FLOAT:
            with mpmath.workprec(self.precision):
                values = {n: _as_mpc(v) for n, v in values.items()}
        elif any(not isinstance(v, GaussianRational) for v in values.values()):
            raise EvaluationError("exact mode needs Gaussian-rational values")
        self.values = values
        self._memo: Dict[Expr, Scalar] = {}

    def __call__(self, e: Expr) -> Scalar:
        if self.mode is ScalarMode.FLOAT:
            with mpmath.workprec(self.precision):
                return self._run(e)
        return self._run(e)

    def _leaf(self, node: Expr) -> Scalar:
        if type(node) is Const:
            if self.mode is ScalarMode.FLOAT:
                return node.value.to_mpc()
            return node.value
        name = node.var.name
        try:
            return self.values[name]
        except KeyError:
            raise MissingAssignment(name) from None

    def _run(self, root: Expr) -> Scalar:
        memo = self._memo
        if root in memo:
            return memo[root]
        # iterative post-order; deep jets exceed the recursion limit otherwise
        stack = [(root, False)]
        while stack:
            node, expanded = stack.pop()
            if node in memo:
                continue
            kind = type(node)
            if kind is Const or kind is Var:
                memo[node] = self._leaf(node)
                continue
            if not expanded:
                stack.append((node, True))
                stack.extend((c, False) for c in node.children() if c not in memo)
                continue
            if kind is Sum:
                total = memo[node.terms[0]]
                for t in node.terms[1:]:
                    total = total + memo[t]
                memo[node] = total
            elif kind is Product:
                result = memo[node.factors[0]]
                for f in node.factors[1:]:
                    result = result * memo[f]
                memo[node] = result
            elif kind is Power:
                base = memo[node.base]
                if node.exp < 0 and scalar_is_zero(base):
                    raise DivisionByZero(node.base)
                memo[node] = base ** node.exp
            elif kind is Neg:
                memo[node] = -memo[node.child]
        return memo[root]


def evaluate(
    e: Expr,
    point: Mapping[str, Any],
    mode: Union[ScalarMode, str] = ScalarMode.EXACT,
) -> Scalar:
    """Value of ``e`` at ``point``; exact unless ``mode`` is float."""
    if not isinstance(point, Point):
        point = Point(point)
    return Evaluator(point, mode)(e)


__all__ = ["Evaluator", "Point", "evaluate"]
