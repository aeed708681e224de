"""JSON syntax trees for surfaces supplied as files.

Node shapes::

    {"const": "1/2"}                 any DSL constant text
    {"var": "z1"}
    {"op": "sum" | "product", "args": [node, ...]}
    {"op": "pow", "base": node, "exp": -2}
    {"op": "neg", "arg": node}
    {"op": "div", "args": [numerator, denominator]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, Union

from .errors import ParseError, UnknownIdentifier
from .nodes import Const, Expr, Neg, Power, Product, Sum, Var, add, mul, neg, power, quotient, var
from .variables import DSL_IDENTIFIERS, VARIABLES


def _fail(message: str) -> ParseError:
    return ParseError(message, 0, "")


def from_json(node: Any) -> Expr:
    if not isinstance(node, dict):
        raise _fail(f"expected an object, got {type(node).__name__}")
    if "const" in node:
        from .parser import parse_expr

        value = parse_expr(str(node["const"]))
        if type(value) is not Const:
            raise _fail(f"const {node['const']!r} is not a constant")
        return value
    if "var" in node:
        name = node["var"]
        if name not in DSL_IDENTIFIERS:
            raise UnknownIdentifier(f"unknown identifier {name!r}", 0, str(name))
        return var(VARIABLES[name])
    op = node.get("op")
    if op == "sum":
        return add(*(from_json(a) for a in node.get("args", [])))
    if op == "product":
        return mul(*(from_json(a) for a in node.get("args", [])))
    if op == "div":
        args = node.get("args", [])
        if len(args) != 2:
            raise _fail("div takes exactly two args")
        return quotient(from_json(args[0]), from_json(args[1]))
    if op == "pow":
        exp = node.get("exp")
        if not isinstance(exp, int) or isinstance(exp, bool) or exp == 0:
            raise _fail("pow needs a nonzero integer exp")
        return power(from_json(node.get("base")), exp)
    if op == "neg":
        return neg(from_json(node.get("arg")))
    raise _fail(f"unknown op {op!r}")


def to_json(e: Expr) -> Dict[str, Any]:
    kind = type(e)
    if kind is Const:
        return {"const": str(e.value)}
    if kind is Var:
        return {"var": e.var.name}
    if kind is Sum:
        return {"op": "sum", "args": [to_json(t) for t in e.terms]}
    if kind is Product:
        return {"op": "product", "args": [to_json(f) for f in e.factors]}
    if kind is Power:
        return {"op": "pow", "base": to_json(e.base), "exp": e.exp}
    if kind is Neg:
        return {"op": "neg", "arg": to_json(e.child)}
    raise TypeError(kind.__name__)  # pragma: no cover


def load_json_expr(path: Union[str, Path]) -> Expr:
    """Read a surface AST file; a top-level ``{"surface": ...}`` wrapper is accepted."""
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.pos, "") from exc
    if isinstance(data, dict) and "surface" in data:
        data = data["surface"]
    return from_json(data)


__all__ = ["from_json", "load_json_expr", "to_json"]
