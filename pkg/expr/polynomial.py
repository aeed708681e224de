"""Expanded polynomial form for exact structural comparison."""

from __future__ import annotations

from typing import Dict, Iterable, Tuple

from .errors import NotPolynomial
from .nodes import Const, Expr, Neg, Power, Product, Sum, Var, add, const, mul, power, var
from .scalars import GaussianRational
from .variables import VARIABLES, ordering_key

Monomial = Tuple[Tuple[str, int], ...]
Polynomial = Dict[Monomial, GaussianRational]

_UNIT: Monomial = ()


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    exps: Dict[str, int] = dict(a)
    for name, n in b:
        exps[name] = exps.get(name, 0) + n
    return tuple(sorted(exps.items()))


def poly_add(a: Polynomial, b: Polynomial) -> Polynomial:
    result = dict(a)
    for m, c in b.items():
        total = result.get(m, GaussianRational(0)) + c
        if total.is_zero():
            result.pop(m, None)
        else:
            result[m] = total
    return result


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    result: Polynomial = {}
    for ma, ca in a.items():
        for mb, cb in b.items():
            m = _mono_mul(ma, mb)
            total = result.get(m, GaussianRational(0)) + ca * cb
            if total.is_zero():
                result.pop(m, None)
            else:
                result[m] = total
    return result


def poly_scale(a: Polynomial, c: GaussianRational) -> Polynomial:
    if c.is_zero():
        return {}
    return {m: v * c for m, v in a.items()}


def to_polynomial(e: Expr) -> Polynomial:
    """Fully expand ``e``; raises ``NotPolynomial`` on a negative power."""
    memo: Dict[int, Polynomial] = {}

    def walk(node: Expr) -> Polynomial:
        hit = memo.get(id(node))
        if hit is not None:
            return hit
        kind = type(node)
        if kind is Const:
            result = {} if node.value.is_zero() else {_UNIT: node.value}
        elif kind is Var:
            result = {((node.var.name, 1),): GaussianRational(1)}
        elif kind is Sum:
            result = {}
            for t in node.terms:
                result = poly_add(result, walk(t))
        elif kind is Product:
            result = {_UNIT: GaussianRational(1)}
            for f in node.factors:
                result = poly_mul(result, walk(f))
        elif kind is Neg:
            result = poly_scale(walk(node.child), GaussianRational(-1))
        elif kind is Power:
            if node.exp < 0:
                raise NotPolynomial(f"negative power in {node}")
            base = walk(node.base)
            result = {_UNIT: GaussianRational(1)}
            for _ in range(node.exp):
                result = poly_mul(result, base)
        else:  # pragma: no cover
            raise TypeError(kind.__name__)
        memo[id(node)] = result
        return result

    return walk(e)


def from_polynomial(p: Polynomial) -> Expr:
    terms = []
    for m, c in sorted(p.items(), key=lambda item: _mono_key(item[0])):
        factors = [power(var(VARIABLES[name]), n) for name, n in m]
        terms.append(mul(const(c), *factors))
    return add(*terms)


def _mono_key(m: Monomial) -> Tuple:
    return tuple((ordering_key(VARIABLES[name]), n) for name, n in m)


def expand(e: Expr) -> Expr:
    """Canonical expanded form of a polynomial expression."""
    return from_polynomial(to_polynomial(e))


def polynomials_equal(a: Expr, b: Expr) -> bool:
    return to_polynomial(a - b) == {}


def degree(p: Polynomial, names: Iterable[str] = ()) -> int:
    wanted = set(names)
    best = 0
    for m in p:
        best = max(best, sum(n for name, n in m if not wanted or name in wanted))
    return best


__all__ = [
    "Monomial",
    "Polynomial",
    "degree",
    "expand",
    "from_polynomial",
    "poly_add",
    "poly_mul",
    "poly_scale",
    "polynomials_equal",
    "to_polynomial",
]
