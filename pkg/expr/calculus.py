"""Wirtinger differentiation, structural conjugation and substitution."""

from __future__ import annotations

import sys
from typing import Dict, FrozenSet, Iterable, Mapping, Union

from .nodes import (
    ONE,
    ZERO,
    Const,
    Expr,
    Neg,
    Power,
    Product,
    Sum,
    Var,
    add,
    as_expr,
    const,
    mul,
    neg,
    power,
    var,
)
from .variables import VarId

# Deep jets (fifth-order derivatives of quotients) nest a few thousand levels.
if sys.getrecursionlimit() < 4000:
    sys.setrecursionlimit(4000)

_EMPTY: FrozenSet[str] = frozenset()


def free_vars(e: Expr) -> FrozenSet[str]:
    """Names of the variables occurring in ``e`` (memoized on the node)."""
    cached = e._free
    if cached is not None:
        return cached
    if type(e) is Var:
        result = frozenset((e.var.name,))
    elif type(e) is Const:
        result = _EMPTY
    else:
        result = frozenset().union(*(free_vars(c) for c in e.children()))
    e._free = result
    return result


def differentiate(e: Expr, x: Union[VarId, str]) -> Expr:
    """Partial derivative with z and zb treated as independent variables."""
    name = x if isinstance(x, str) else x.name
    return _diff(e, name)


def _diff(e: Expr, name: str) -> Expr:
    if name not in free_vars(e):
        return ZERO
    memo = e._derivs
    if memo is None:
        memo = e._derivs = {}
    hit = memo.get(name)
    if hit is not None:
        return hit
    kind = type(e)
    if kind is Var:
        result = ONE
    elif kind is Sum:
        result = add(*(_diff(t, name) for t in e.terms))
    elif kind is Neg:
        result = neg(_diff(e.child, name))
    elif kind is Power:
        db = _diff(e.base, name)
        result = mul(const(e.exp), power(e.base, e.exp - 1), db)
    elif kind is Product:
        terms = []
        factors = e.factors
        for i, f in enumerate(factors):
            df = _diff(f, name)
            if df is ZERO:
                continue
            terms.append(mul(*factors[:i], df, *factors[i + 1 :]))
        result = add(*terms)
    else:  # pragma: no cover
        raise TypeError(f"unknown node {kind.__name__}")
    memo[name] = result
    return result


def derivative(e: Expr, *names: Union[VarId, str]) -> Expr:
    """Iterated partial derivative, e.g. ``derivative(F, "z1", "zb1")``."""
    for x in names:
        e = differentiate(e, x)
    return e


def conjugate(e: Expr) -> Expr:
    """Swap every variable with its partner and conjugate every constant."""
    cached = e._conj
    if cached is not None:
        return cached
    kind = type(e)
    if kind is Const:
        result = const(e.value.conjugate())
    elif kind is Var:
        result = var(e.var.partner)
    elif kind is Sum:
        result = add(*(conjugate(t) for t in e.terms))
    elif kind is Product:
        result = mul(*(conjugate(f) for f in e.factors))
    elif kind is Power:
        result = power(conjugate(e.base), e.exp)
    elif kind is Neg:
        result = neg(conjugate(e.child))
    else:  # pragma: no cover
        raise TypeError(f"unknown node {kind.__name__}")
    e._conj = result
    if result._conj is None:
        result._conj = e
    return result


def substitute(e: Expr, mapping: Mapping[Union[VarId, str], object]) -> Expr:
    """Replace variables by expressions (or constants) throughout ``e``."""
    table: Dict[str, Expr] = {}
    for key, value in mapping.items():
        name = key if isinstance(key, str) else key.name
        table[name] = as_expr(value)
    targets = frozenset(table)
    memo: Dict[int, Expr] = {}

    def walk(node: Expr) -> Expr:
        if not (free_vars(node) & targets):
            return node
        hit = memo.get(id(node))
        if hit is not None:
            return hit
        kind = type(node)
        if kind is Var:
            result = table[node.var.name]
        elif kind is Sum:
            result = add(*(walk(t) for t in node.terms))
        elif kind is Product:
            result = mul(*(walk(f) for f in node.factors))
        elif kind is Power:
            result = power(walk(node.base), node.exp)
        else:
            result = neg(walk(node.child))
        memo[id(node)] = result
        return result

    return walk(e)


def simplify_basic(e: Expr) -> Expr:
    """Rebuild ``e`` through the normalizing constructors.

    Construction already folds constants, flattens and collects, so this is
    idempotent and returns ``e`` itself for any tree built by this package.
    """
    memo: Dict[int, Expr] = {}

    def walk(node: Expr) -> Expr:
        hit = memo.get(id(node))
        if hit is not None:
            return hit
        kind = type(node)
        if kind is Sum:
            result = add(*(walk(t) for t in node.terms))
        elif kind is Product:
            result = mul(*(walk(f) for f in node.factors))
        elif kind is Power:
            result = power(walk(node.base), node.exp)
        elif kind is Neg:
            result = neg(walk(node.child))
        else:
            result = node
        memo[id(node)] = result
        return result

    return walk(e)


def is_real_expr(e: Expr) -> bool:
    """Structural realness: conjugation maps the tree to itself."""
    return conjugate(e) is e


def depends_on(e: Expr, names: Iterable[Union[VarId, str]]) -> bool:
    wanted = {n if isinstance(n, str) else n.name for n in names}
    return bool(free_vars(e) & wanted)


__all__ = [
    "conjugate",
    "depends_on",
    "derivative",
    "differentiate",
    "free_vars",
    "is_real_expr",
    "simplify_basic",
    "substitute",
]
