"""Canonical printer emitting the expression DSL.

The output re-parses to the identical (interned) node for every tree built by
the smart constructors. Negative exponents are always rendered as division.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

from .nodes import Const, Expr, Neg, Power, Product, Sum, Var, neg
from .scalars import GaussianRational

# Binding power of printed text, loosest first.
SUM, PRODUCT, UNARY, ATOM = 1, 2, 3, 4

_ONE = GaussianRational(1)
_MINUS_ONE = GaussianRational(-1)


def _const_level(value: GaussianRational) -> int:
    if value.re and value.im:
        return SUM
    part = value.re if value.re else value.im
    if part < 0:
        return UNARY
    if value.im:
        return ATOM if value.im == 1 else PRODUCT
    return ATOM if part.denominator == 1 else PRODUCT


def _negative_scalar(value: GaussianRational) -> bool:
    if value.re and value.im:
        return False
    return (value.re or value.im) < 0


def _looks_negative(e: Expr) -> bool:
    kind = type(e)
    if kind is Neg:
        return True
    if kind is Product and type(e.factors[0]) is Const:
        return _negative_scalar(e.factors[0].value)
    if kind is Const:
        return _negative_scalar(e.value)
    return False


def _wrap(text: str, level: int, needed: int) -> str:
    return f"({text})" if level < needed else text


def _render(e: Expr) -> Tuple[str, int]:
    kind = type(e)
    if kind is Const:
        return str(e.value), _const_level(e.value)
    if kind is Var:
        return e.var.name, ATOM
    if kind is Power:
        if e.exp < 0:
            return _product_text(None, [], [(e.base, -e.exp)]), PRODUCT
        return _factor_text(e.base, e.exp), UNARY
    if kind is Neg:
        child = e.child
        text, level = _render(child)
        if type(child) is Power and child.exp < 0:
            return f"-{text}", UNARY
        return f"-{_wrap(text, level, UNARY)}", UNARY
    if kind is Product:
        coefficient: Optional[GaussianRational] = None
        numerator: List[Expr] = []
        denominator: List[Tuple[Expr, int]] = []
        for f in e.factors:
            if type(f) is Const:
                coefficient = f.value
            elif type(f) is Power and f.exp < 0:
                denominator.append((f.base, -f.exp))
            else:
                numerator.append(f)
        return _product_text(coefficient, numerator, denominator), PRODUCT
    if kind is Sum:
        pieces: List[str] = []
        for index, term in enumerate(e.terms):
            if index and _looks_negative(term):
                text, level = _render(neg(term))
                pieces.append(f" - {_wrap(text, level, PRODUCT)}")
                continue
            text, level = _render(term)
            if index:
                pieces.append(f" + {_wrap(text, level, PRODUCT)}")
            else:
                pieces.append(text)
        return "".join(pieces), SUM
    raise TypeError(f"unknown node {kind.__name__}")  # pragma: no cover


def _factor_text(base: Expr, exp: int) -> str:
    text, level = _render(base)
    text = _wrap(text, level, ATOM)
    return text if exp == 1 else f"{text}^{exp}"


def _product_text(
    coefficient: Optional[GaussianRational],
    numerator: Sequence[Expr],
    denominator: Sequence[Tuple[Expr, int]],
) -> str:
    parts: List[str] = []
    prefix = ""
    if coefficient is not None and coefficient != _ONE:
        if coefficient == _MINUS_ONE:
            prefix = "-"
        else:
            level = _const_level(coefficient)
            parts.append(_wrap(str(coefficient), level, PRODUCT))
    for f in numerator:
        text, level = _render(f)
        parts.append(_wrap(text, level, UNARY))
    if not parts:
        parts.append("1")
    head = prefix + "*".join(parts)
    return head + "".join(f"/{_factor_text(base, n)}" for base, n in denominator)


def to_text(e: Expr) -> str:
    """Render ``e`` in the DSL grammar."""
    text, _ = _render(e)
    return text


__all__ = ["to_text"]
