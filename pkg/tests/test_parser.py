"""DSL parsing, printing and JSON syntax trees."""

import json

import pytest

from expr.errors import ParseError, UnknownIdentifier
from expr.json_ast import from_json, load_json_expr, to_json
from expr.nodes import IMAG, const, var
from expr.parser import parse_expr, tokenize
from expr.printer import to_text
from expr.scalars import GaussianRational
from expr.variables import Z1
from model.graph import mlc_graph


def _parse_error(text: str) -> ParseError:
    with pytest.raises(ParseError) as info:
        parse_expr(text)
    return info.value


def test_precedence_and_unary_minus():
    assert parse_expr("1 + 2*3^2") is const(19)
    assert parse_expr("-2^2") is const(-4)
    assert parse_expr("2*-z1") is parse_expr("-2*z1")
    assert parse_expr("z1^-2") is parse_expr("1/z1^2")


def test_rational_and_imaginary_constants():
    assert parse_expr("3/4") is const(GaussianRational(3) / 4)
    assert parse_expr("i") is IMAG
    assert parse_expr("(1 + i)*(1 - i)") is const(2)


def test_tokens_carry_positions():
    tokens = tokenize("z1 + 12")
    assert [(t.kind, t.position) for t in tokens] == [("name", 0), ("op", 3), ("int", 5), ("end", 7)]


def test_error_positions():
    assert _parse_error("z1*(").position == 4
    assert _parse_error("z1 $ 2").position == 3
    assert _parse_error("1/0").position == 2
    assert "zero exponent" in str(_parse_error("z1^0"))
    with pytest.raises(UnknownIdentifier) as info:
        parse_expr("z1 + q")
    assert info.value.position == 5
    assert info.value.pointer().endswith("     ^")


def test_printer_output_reparses_to_the_same_node():
    for e in (
        mlc_graph(),
        parse_expr("z1^-2*zb1 - 3/4*i*z2"),
        parse_expr("-(z1 + zb1)^3/(2 - i*z2)"),
        parse_expr("(1/2 + 3*i)*z1*zb2 - v"),
    ):
        assert parse_expr(to_text(e)) is e


def test_json_tree_roundtrip_and_file_loading(tmp_path):
    e = parse_expr("z1*zb1/(1 - z2*zb2) + 1/2*i")
    assert from_json(to_json(e)) is e
    path = tmp_path / "surface.json"
    path.write_text(json.dumps({"surface": {"op": "div", "args": [{"var": "z1"}, {"const": "2"}]}}))
    assert load_json_expr(path) is parse_expr("z1/2")


def test_json_tree_errors(tmp_path):
    with pytest.raises(ParseError):
        from_json({"op": "exp", "args": []})
    with pytest.raises(UnknownIdentifier):
        from_json({"var": "x"})
    with pytest.raises(ParseError):
        from_json({"op": "pow", "base": {"var": "z1"}, "exp": 0})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ParseError):
        load_json_expr(bad)


def test_variables_parse_to_shared_nodes():
    assert parse_expr("z1") is var(Z1)
