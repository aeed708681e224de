"""Immutable, hash-consed expression nodes.

Every node is built through the smart constructors ``add``, ``mul``,
``power``, ``neg``, ``const`` and ``var``; they normalize on the way in
(constant folding, flattening, like-term and like-base collection, zero and
one elimination) and intern the result, so two structurally equal trees are
the same Python object. Node identity is therefore structural equality, and
memo caches (derivatives, conjugates, free variables) live on the nodes.

Children of sums and products are ordered by a structural digest that does
not depend on construction history, which keeps printing deterministic.
"""

from __future__ import annotations

import hashlib
import weakref
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from .errors import DivisionByZero
from .scalars import GaussianRational
from .variables import VarId

_TABLE: "weakref.WeakValueDictionary[Tuple[Any, ...], Expr]" = weakref.WeakValueDictionary()

_Q0 = GaussianRational(0)
_Q1 = GaussianRational(1)
_QM1 = GaussianRational(-1)


def _digest(data: bytes) -> bytes:
    return hashlib.blake2b(data, digest_size=8).digest()


class Expr:
    """Base class of all nodes. Do not instantiate directly."""

    __slots__ = ("digest", "sort_key", "_derivs", "_conj", "_free", "__weakref__")

    kind = "expr"

    def children(self) -> Tuple["Expr", ...]:
        return ()

    # operator sugar -------------------------------------------------------
    def __add__(self, other: Any) -> "Expr":
        return add(self, other)

    def __radd__(self, other: Any) -> "Expr":
        return add(other, self)

    def __sub__(self, other: Any) -> "Expr":
        return add(self, neg(as_expr(other)))

    def __rsub__(self, other: Any) -> "Expr":
        return add(other, neg(self))

    def __mul__(self, other: Any) -> "Expr":
        return mul(self, other)

    def __rmul__(self, other: Any) -> "Expr":
        return mul(other, self)

    def __truediv__(self, other: Any) -> "Expr":
        return mul(self, power(as_expr(other), -1))

    def __rtruediv__(self, other: Any) -> "Expr":
        return mul(other, power(self, -1))

    def __neg__(self) -> "Expr":
        return neg(self)

    def __pow__(self, n: int) -> "Expr":
        return power(self, n)

    # inspection -----------------------------------------------------------
    def is_zero(self) -> bool:
        return self is ZERO

    def is_const(self) -> bool:
        return False

    def __repr__(self) -> str:
        from .printer import to_text

        return f"Expr({to_text(self)})"

    def __str__(self) -> str:
        from .printer import to_text

        return to_text(self)


class Const(Expr):
    __slots__ = ("value",)
    kind = "const"

    def is_const(self) -> bool:
        return True


class Var(Expr):
    __slots__ = ("var",)
    kind = "var"


class Sum(Expr):
    __slots__ = ("terms",)
    kind = "sum"

    def children(self) -> Tuple[Expr, ...]:
        return self.terms


class Product(Expr):
    __slots__ = ("factors",)
    kind = "product"

    def children(self) -> Tuple[Expr, ...]:
        return self.factors


class Power(Expr):
    __slots__ = ("base", "exp")
    kind = "power"

    def children(self) -> Tuple[Expr, ...]:
        return (self.base,)


class Neg(Expr):
    __slots__ = ("child",)
    kind = "neg"

    def children(self) -> Tuple[Expr, ...]:
        return (self.child,)


def _init(node: Expr, digest: bytes, sort_key: Tuple[Any, ...]) -> Expr:
    node.digest = digest
    node.sort_key = sort_key
    node._derivs = None
    node._conj = None
    node._free = None
    return node


def _intern(key: Tuple[Any, ...], build) -> Expr:
    node = _TABLE.get(key)
    if node is None:
        node = build()
        _TABLE[key] = node
    return node


# raw interning (arguments already canonical) ---------------------------------


def _const(value: GaussianRational) -> Const:
    def build() -> Const:
        node = Const.__new__(Const)
        node.value = value
        data = f"C{value.re}|{value.im}".encode()
        return _init(node, _digest(data), (0, "", 0, b""))

    return _intern(("C", value.re, value.im), build)


def _var(v: VarId) -> Var:
    def build() -> Var:
        node = Var.__new__(Var)
        node.var = v
        return _init(node, _digest(b"V" + v.name.encode()), (1, v.name, 1, b""))

    return _intern(("V", v.name), build)


def _sum(terms: Tuple[Expr, ...]) -> Expr:
    def build() -> Sum:
        node = Sum.__new__(Sum)
        node.terms = terms
        d = _digest(b"S" + b"".join(t.digest for t in terms))
        return _init(node, d, (2, "", 0, d))

    return _intern(("S",) + tuple(id(t) for t in terms), build)


def _product(factors: Tuple[Expr, ...]) -> Expr:
    def build() -> Product:
        node = Product.__new__(Product)
        node.factors = factors
        d = _digest(b"P" + b"".join(f.digest for f in factors))
        return _init(node, d, (2, "", 0, d))

    return _intern(("P",) + tuple(id(f) for f in factors), build)


def _power(base: Expr, n: int) -> Expr:
    def build() -> Power:
        node = Power.__new__(Power)
        node.base = base
        node.exp = n
        d = _digest(b"W" + base.digest + str(n).encode())
        if isinstance(base, Var):
            key = (1, base.var.name, n, b"")
        else:
            key = (2, "", 0, d)
        return _init(node, d, key)

    return _intern(("W", id(base), n), build)


def _neg(child: Expr) -> Expr:
    def build() -> Neg:
        node = Neg.__new__(Neg)
        node.child = child
        d = _digest(b"N" + child.digest)
        return _init(node, d, (2, "", 0, d))

    return _intern(("N", id(child)), build)


def _sort_key(e: Expr) -> Tuple[Any, ...]:
    return e.sort_key


# smart constructors -------------------------------------------------------------


def as_expr(value: Any) -> Expr:
    if isinstance(value, Expr):
        return value
    if isinstance(value, (int, Fraction, GaussianRational)):
        return const(value)
    if isinstance(value, VarId):
        return var(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an expression")


def const(value: Any) -> Const:
    return _const(GaussianRational.coerce(value))


def var(v: VarId) -> Var:
    return _var(v)


def _split_coefficient(term: Expr) -> Tuple[GaussianRational, Expr]:
    """Split ``c * rest`` into ``(c, rest)`` for like-term collection."""
    if type(term) is Neg:
        return _QM1, term.child
    if type(term) is Product and type(term.factors[0]) is Const:
        rest = term.factors[1:]
        return term.factors[0].value, rest[0] if len(rest) == 1 else _product(rest)
    return _Q1, term


def _scaled(key: Expr, c: GaussianRational) -> Expr:
    if c == _Q1:
        return key
    if c == _QM1:
        return neg(key)
    return mul(_const(c), key)


def add(*terms: Any) -> Expr:
    constant = _Q0
    coeffs: Dict[Expr, GaussianRational] = {}
    stack: List[Tuple[Expr, GaussianRational]] = [(as_expr(t), _Q1) for t in reversed(terms)]
    while stack:
        term, scale = stack.pop()
        kind = type(term)
        if kind is Const:
            constant = constant + scale * term.value
            continue
        if kind is Sum:
            stack.extend((t, scale) for t in reversed(term.terms))
            continue
        if kind is Neg and type(term.child) is Sum:
            stack.append((term.child, -scale))
            continue
        if (
            kind is Product
            and len(term.factors) == 2
            and type(term.factors[0]) is Const
            and type(term.factors[1]) is Sum
        ):
            stack.append((term.factors[1], scale * term.factors[0].value))
            continue
        c, key = _split_coefficient(term)
        c = c * scale
        previous = coeffs.get(key)
        coeffs[key] = c if previous is None else previous + c
    parts = [_scaled(key, c) for key, c in coeffs.items() if not c.is_zero()]
    parts.sort(key=_sort_key)
    if not constant.is_zero():
        parts.append(_const(constant))
    if not parts:
        return ZERO
    if len(parts) == 1:
        return parts[0]
    return _sum(tuple(parts))


def mul(*factors: Any) -> Expr:
    constant = _Q1
    exps: Dict[Expr, int] = {}
    stack: List[Expr] = [as_expr(f) for f in reversed(factors)]
    while stack:
        f = stack.pop()
        kind = type(f)
        if kind is Const:
            constant = constant * f.value
        elif kind is Neg:
            constant = -constant
            stack.append(f.child)
        elif kind is Product:
            stack.extend(reversed(f.factors))
        elif kind is Power:
            exps[f.base] = exps.get(f.base, 0) + f.exp
        else:
            exps[f] = exps.get(f, 0) + 1
    if constant.is_zero():
        return ZERO
    parts = [power(base, n) for base, n in exps.items() if n != 0]
    parts.sort(key=_sort_key)
    if not parts:
        return _const(constant)
    if len(parts) == 1:
        if constant == _Q1:
            return parts[0]
        if constant == _QM1:
            return _neg(parts[0])
    if constant != _Q1:
        parts.insert(0, _const(constant))
    return _product(tuple(parts))


def power(base: Any, n: int) -> Expr:
    base = as_expr(base)
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError("exponents are integers")
    if n == 0:
        return ONE
    if n == 1:
        return base
    kind = type(base)
    if kind is Const:
        if base.value.is_zero() and n < 0:
            raise DivisionByZero(base, "0^" + str(n))
        return _const(base.value ** n)
    if kind is Power:
        return power(base.base, base.exp * n)
    if kind is Product:
        return mul(*(power(f, n) for f in base.factors))
    if kind is Neg:
        inner = power(base.child, n)
        return inner if n % 2 == 0 else neg(inner)
    return _power(base, n)


def neg(e: Any) -> Expr:
    e = as_expr(e)
    kind = type(e)
    if kind is Const:
        return _const(-e.value)
    if kind is Neg:
        return e.child
    if kind is Product:
        head = e.factors[0]
        if type(head) is Const:
            c = -head.value
            rest = e.factors[1:]
            if c == _Q1:
                return rest[0] if len(rest) == 1 else _product(rest)
            return _product((_const(c),) + rest)
        return _product((_const(_QM1),) + e.factors)
    return _neg(e)


def reciprocal(e: Any) -> Expr:
    return power(as_expr(e), -1)


def quotient(numerator: Any, denominator: Any) -> Expr:
    return mul(numerator, power(as_expr(denominator), -1))


ZERO = _const(_Q0)
ONE = _const(_Q1)
IMAG = _const(GaussianRational(0, 1))
HALF = _const(GaussianRational(Fraction(1, 2)))


def node_count(e: Expr) -> int:
    """Number of distinct nodes in the DAG below ``e``."""
    seen = set()
    stack = [e]
    while stack:
        node = stack.pop()
        if id(node) in seen:
            continue
        seen.add(id(node))
        stack.extend(node.children())
    return len(seen)


def interned_count() -> int:
    return len(_TABLE)


__all__ = [
    "Const",
    "Expr",
    "HALF",
    "IMAG",
    "Neg",
    "ONE",
    "Power",
    "Product",
    "Sum",
    "Var",
    "ZERO",
    "add",
    "as_expr",
    "const",
    "interned_count",
    "mul",
    "neg",
    "node_count",
    "power",
    "quotient",
    "reciprocal",
    "var",
]
