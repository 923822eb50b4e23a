"""Canonical text rendering; the inverse of the literal grammar."""

from __future__ import annotations

from functools import singledispatch

from ..hyperreal import NonStdValue
from ..ndset import IntervalUnion
from ..neutroset import CartesianPair, NeutroProduct, NeutroSet, NeutroTriple
from ..taxonomy import Classification
from .diagnostics import Diagnostic, DiagnosticError
from .lexer import tokenize
from .parser import BinOp, Complement, Lookup, Name, Parser, Product

__all__ = [
    "format_value",
    "format_expr",
    "format_set_decl",
    "parse_number",
    "parse_component",
    "parse_triple",
]

_PREC = {"|": 1, "\\": 1, "&": 2, "x": 3}


@singledispatch
def format_value(value) -> str:
    raise TypeError(f"cannot format {type(value).__name__}")


@format_value.register
def _(value: bool) -> str:
    return "true" if value else "false"


@format_value.register
def _(value: NonStdValue) -> str:
    return str(value)


@format_value.register
def _(value: IntervalUnion) -> str:
    return str(value)


@format_value.register
def _(value: NeutroTriple) -> str:
    return str(value)


@format_value.register
def _(value: Classification) -> str:
    return str(value)


@format_value.register
def _(value: CartesianPair) -> str:
    return str(value)


@format_value.register
def _(value: NeutroSet) -> str:
    body = ", ".join(f"{name}: {t}" for name, t in value.membership.items())
    return "{" + body + "}"


@format_value.register
def _(value: NeutroProduct) -> str:
    return "{" + ", ".join(str(pair) for pair in value.tuples()) + "}"


def format_set_decl(name: str, universe: str, value: NeutroSet) -> str:
    return f"set {name} over {universe} {format_value(value)}"


def format_expr(expr, parent: int = 0) -> str:
    """Render an expression AST with the minimum parentheses."""
    if isinstance(expr, Name):
        return expr.name
    if isinstance(expr, Lookup):
        return f"{expr.name}({', '.join(expr.args)})"
    if isinstance(expr, Complement):
        return f"complement({format_expr(expr.operand)})"
    if isinstance(expr, BinOp):
        op, prec = expr.op, _PREC[expr.op]
    elif isinstance(expr, Product):
        op, prec = "x", _PREC["x"]
    else:
        raise TypeError(f"not an expression: {expr!r}")
    # operators are left-associative: the right operand needs parens at equal precedence
    text = f"{format_expr(expr.left, prec)} {op} {format_expr(expr.right, prec + 1)}"
    return f"({text})" if prec < parent else text


def _parse_fragment(text: str, rule: str):
    parser = Parser(tokenize(text))
    result = getattr(parser, rule)()
    parser.end_of_statement()
    if parser.tok.kind != "EOF":
        raise parser.error(f"unexpected {parser.tok} after {rule}")
    return result


def parse_number(text: str) -> NonStdValue:
    parser = Parser(tokenize(text))
    tok = parser.expect_number()
    parser.end_of_statement()
    if parser.tok.kind != "EOF":
        raise parser.error(f"unexpected {parser.tok} after number")
    return tok.value


def parse_component(text: str) -> IntervalUnion:
    """Parse ``"[0.4,0.45]|[0.5,0.51]"``, ``"{0.2,0.24}"`` or ``"1^+"``."""
    return _parse_fragment(text, "component").value


def parse_triple(text: str, strict: bool = True) -> NeutroTriple:
    lit = _parse_fragment(text, "triple")
    comps = [c.value for c in lit.components]
    if strict:
        try:
            return NeutroTriple(*comps)
        except ValueError as exc:
            raise DiagnosticError(
                Diagnostic(lit.pos.line, lit.pos.column, str(exc)), phase="parse"
            ) from None
    return NeutroTriple.clamped(*comps)

