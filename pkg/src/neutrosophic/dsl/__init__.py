"""A small declarative language for neutrosophic sets (``.ns`` scripts)."""

from .diagnostics import Diagnostic, DiagnosticError
from .evaluator import Environment, Evaluator, Result, evaluate, run_source
from .format import (
    format_expr,
    format_set_decl,
    format_value,
    parse_component,
    parse_number,
    parse_triple,
)
from .lexer import Token, tokenize
from .parser import Script, parse, parse_source
