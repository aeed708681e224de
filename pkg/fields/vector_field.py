"""First-order derivations with expression coefficients."""

from __future__ import annotations

from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from expr.calculus import conjugate, differentiate
from expr.nodes import ZERO, Expr, add, as_expr, mul
from expr.printer import to_text
from expr.variables import VARIABLES, VarId, ordering_key


def _name(x: Union[str, VarId]) -> str:
    return x if isinstance(x, str) else x.name


class VectorField:
    """``sum_x coefficients[x] * d/dx``; zero coefficients are dropped."""

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Mapping[Union[str, VarId], object] = ()) -> None:
        items: Dict[str, Expr] = {}
        for key, value in dict(coefficients).items():
            e = as_expr(value)
            if not e.is_zero():
                items[_name(key)] = e
        self._coefficients = dict(
            sorted(items.items(), key=lambda kv: ordering_key(VARIABLES[kv[0]]))
        )

    @classmethod
    def partial(cls, x: Union[str, VarId]) -> "VectorField":
        return cls({_name(x): 1})

    @classmethod
    def zero(cls) -> "VectorField":
        return cls()

    # coefficient access -----------------------------------------------------
    def coefficient(self, x: Union[str, VarId]) -> Expr:
        return self._coefficients.get(_name(x), ZERO)

    def __getitem__(self, x: Union[str, VarId]) -> Expr:
        return self.coefficient(x)

    def items(self) -> Iterator[Tuple[str, Expr]]:
        return iter(self._coefficients.items())

    def variables(self) -> Tuple[str, ...]:
        return tuple(self._coefficients)

    def is_zero(self) -> bool:
        return not self._coefficients

    # derivation -------------------------------------------------------------
    def apply(self, e: Expr) -> Expr:
        """``X(e) = sum_x X[x] * de/dx``."""
        return add(*(mul(c, differentiate(e, x)) for x, c in self._coefficients.items()))

    __call__ = apply

    def bracket(self, other: "VectorField") -> "VectorField":
        """Lie bracket ``[self, other] = self(other[x]) - other(self[x])``."""
        names = set(self._coefficients) | set(other._coefficients)
        return VectorField(
            {x: self.apply(other.coefficient(x)) - other.apply(self.coefficient(x)) for x in names}
        )

    # linear structure -------------------------------------------------------
    def __add__(self, other: "VectorField") -> "VectorField":
        names = set(self._coefficients) | set(other._coefficients)
        return VectorField({x: self.coefficient(x) + other.coefficient(x) for x in names})

    def __sub__(self, other: "VectorField") -> "VectorField":
        return self + other.scale(-1)

    def __neg__(self) -> "VectorField":
        return self.scale(-1)

    def scale(self, factor: object) -> "VectorField":
        f = as_expr(factor)
        return VectorField({x: mul(f, c) for x, c in self._coefficients.items()})

    def __rmul__(self, factor: object) -> "VectorField":
        return self.scale(factor)

    def conjugate(self) -> "VectorField":
        """Conjugate coefficients attached to the partner variables."""
        return VectorField(
            {VARIABLES[x].partner_name: conjugate(c) for x, c in self._coefficients.items()}
        )

    def map_coefficients(self, fn) -> "VectorField":
        return VectorField({x: fn(c) for x, c in self._coefficients.items()})

    def to_dict(self) -> Dict[str, str]:
        return {x: to_text(c) for x, c in self._coefficients.items()}

    def __repr__(self) -> str:
        body = " + ".join(f"({to_text(c)})*d/d{x}" for x, c in self._coefficients.items())
        return f"VectorField({body or '0'})"


def combination(coefficients: Iterable[object], fields: Iterable[VectorField]) -> VectorField:
    """``sum_i a_i * fields[i]``."""
    total = VectorField.zero()
    for a, f in zip(coefficients, fields):
        e = as_expr(a)
        if not e.is_zero():
            total = total + f.scale(e)
    return total


__all__ = ["VectorField", "combination"]
