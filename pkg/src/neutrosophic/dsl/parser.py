"""Recursive-descent parser producing a :class:`Script`.

Grammar (one statement per line; newlines inside brackets are ignored)::

    script    := stmt*
    stmt      := "universe" NAME "=" "{" namelist "}"
               | "set" NAME "over" NAME "{" (entry ("," entry)*)? "}"
               | "relation" NAME "over" NAME ("x" NAME)* "{" (rentry ("," rentry)*)? "}"
               | "eval" expr
               | "check" expr "<=" expr
               | "classify" NAME ("." NAME | "(" namelist ")")
    entry     := NAME ":" triple
    rentry    := "(" namelist ")" ":" triple
    triple    := "(" component "," component "," component ")"
    component := interval ("|" interval)* | "{" num ("," num)* "}"
    interval  := "[" num "," num "]" | num
    expr      := term (("|" | "\\") term)*
    term      := factor ("&" factor)*
    factor    := primary ("x" primary)*
    primary   := NAME ("(" namelist ")")? | "complement" "(" expr ")" | "(" expr ")"
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from ..ndset import IntervalUnion, NsInterval
from .diagnostics import Diagnostic, DiagnosticError
from .lexer import Token, tokenize

__all__ = [
    "Pos",
    "ComponentLit",
    "TripleLit",
    "Name",
    "Lookup",
    "Complement",
    "BinOp",
    "Product",
    "UniverseDecl",
    "SetDecl",
    "RelationDecl",
    "EvalStmt",
    "CheckStmt",
    "ClassifyStmt",
    "Script",
    "Parser",
    "parse",
    "parse_source",
]


@dataclass(frozen=True)
class Pos:
    line: int
    column: int

    @classmethod
    def of(cls, tok: Token) -> Pos:
        return cls(tok.line, tok.column)


@dataclass(frozen=True)
class ComponentLit:
    value: IntervalUnion
    pos: Pos


@dataclass(frozen=True)
class TripleLit:
    T: ComponentLit
    I: ComponentLit  # noqa: E741
    F: ComponentLit
    pos: Pos

    @property
    def components(self) -> tuple[ComponentLit, ComponentLit, ComponentLit]:
        return (self.T, self.I, self.F)


# expressions


@dataclass(frozen=True)
class Name:
    name: str
    pos: Pos


@dataclass(frozen=True)
class Lookup:
    name: str
    args: tuple[str, ...]
    pos: Pos


@dataclass(frozen=True)
class Complement:
    operand: "Expr"
    pos: Pos


@dataclass(frozen=True)
class BinOp:
    op: str  # "&", "|", "\\"
    left: "Expr"
    right: "Expr"
    pos: Pos


@dataclass(frozen=True)
class Product:
    left: "Expr"
    right: "Expr"
    pos: Pos


Expr = Union[Name, Lookup, Complement, BinOp, Product]

# statements


@dataclass(frozen=True)
class UniverseDecl:
    name: str
    elements: tuple[tuple[str, Pos], ...]
    pos: Pos


@dataclass(frozen=True)
class SetDecl:
    name: str
    universe: str
    universe_pos: Pos
    entries: tuple[tuple[str, Pos, TripleLit], ...]
    pos: Pos


@dataclass(frozen=True)
class RelationDecl:
    name: str
    domains: tuple[tuple[str, Pos], ...]
    entries: tuple[tuple[tuple[str, ...], Pos, TripleLit], ...]
    pos: Pos


@dataclass(frozen=True)
class EvalStmt:
    expr: Expr
    pos: Pos


@dataclass(frozen=True)
class CheckStmt:
    left: Expr
    right: Expr
    pos: Pos


@dataclass(frozen=True)
class ClassifyStmt:
    target: str
    element: Optional[str]
    args: Optional[tuple[str, ...]]
    pos: Pos


Statement = Union[UniverseDecl, SetDecl, RelationDecl, EvalStmt, CheckStmt, ClassifyStmt]


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...]


class Parser:
    def __init__(self, tokens: list[Token]) -> None:
        self.tokens = tokens
        self.i = 0

    # token helpers

    @property
    def tok(self) -> Token:
        return self.tokens[self.i]

    def error(self, message: str, tok: Optional[Token] = None) -> DiagnosticError:
        tok = tok or self.tok
        return DiagnosticError(Diagnostic(tok.line, tok.column, message), phase="parse")

    def advance(self) -> Token:
        tok = self.tok
        if tok.kind != "EOF":
            self.i += 1
        return tok

    def at(self, text: str) -> bool:
        return self.tok.kind in ("PUNCT", "KEYWORD") and self.tok.text == text

    def at_times(self) -> bool:
        return self.tok.kind == "NAME" and self.tok.text == "x"

    def expect(self, text: str) -> Token:
        if not self.at(text):
            raise self.error(f"expected '{text}', found {self.tok}")
        return self.advance()

    def expect_name(self, what: str = "name") -> Token:
        if self.tok.kind != "NAME":
            raise self.error(f"expected {what}, found {self.tok}")
        return self.advance()

    def expect_number(self) -> Token:
        if self.tok.kind != "NUMBER":
            raise self.error(f"expected number, found {self.tok}")
        return self.advance()

    def end_of_statement(self) -> None:
        if self.tok.kind == "NEWLINE":
            self.advance()
        elif self.tok.kind != "EOF":
            raise self.error(f"expected end of line, found {self.tok}")

    # grammar

    def script(self) -> Script:
        stmts = []
        while self.tok.kind != "EOF":
            if self.tok.kind == "NEWLINE":
                self.advance()
                continue
            stmts.append(self.statement())
        return Script(tuple(stmts))

    def statement(self) -> Statement:
        tok = self.tok
        if tok.kind != "KEYWORD" or tok.text not in _STATEMENTS:
            raise self.error(
                f"expected statement (universe, set, relation, eval, check, classify), found {tok}"
            )
        stmt = getattr(self, "stmt_" + tok.text)()
        self.end_of_statement()
        return stmt

    def stmt_universe(self) -> UniverseDecl:
        pos = Pos.of(self.advance())
        name = self.expect_name("universe name").text
        self.expect("=")
        self.expect("{")
        elements = [self.namepos()]
        while self.at(","):
            self.advance()
            elements.append(self.namepos())
        self.expect("}")
        return UniverseDecl(name, tuple(elements), pos)

    def namepos(self) -> tuple[str, Pos]:
        tok = self.expect_name("element name")
        return tok.text, Pos.of(tok)

    def namelist(self) -> tuple[str, ...]:
        names = [self.expect_name("element name").text]
        while self.at(","):
            self.advance()
            names.append(self.expect_name("element name").text)
        return tuple(names)

    def stmt_set(self) -> SetDecl:
        pos = Pos.of(self.advance())
        name = self.expect_name("set name").text
        self.expect("over")
        utok = self.expect_name("universe name")
        self.expect("{")
        entries = []
        if not self.at("}"):
            entries.append(self.set_entry())
            while self.at(","):
                self.advance()
                entries.append(self.set_entry())
        self.expect("}")
        return SetDecl(name, utok.text, Pos.of(utok), tuple(entries), pos)

    def set_entry(self) -> tuple[str, Pos, TripleLit]:
        tok = self.expect_name("element name")
        self.expect(":")
        return tok.text, Pos.of(tok), self.triple()

    def stmt_relation(self) -> RelationDecl:
        pos = Pos.of(self.advance())
        name = self.expect_name("relation name").text
        self.expect("over")
        domains = [self.namepos()]
        while self.at_times():
            self.advance()
            domains.append(self.namepos())
        self.expect("{")
        entries = []
        if not self.at("}"):
            entries.append(self.relation_entry())
            while self.at(","):
                self.advance()
                entries.append(self.relation_entry())
        self.expect("}")
        return RelationDecl(name, tuple(domains), tuple(entries), pos)

    def relation_entry(self) -> tuple[tuple[str, ...], Pos, TripleLit]:
        tok = self.expect("(")
        names = self.namelist()
        self.expect(")")
        self.expect(":")
        return names, Pos.of(tok), self.triple()

    def triple(self) -> TripleLit:
        tok = self.expect("(")
        t = self.component()
        self.expect(",")
        i = self.component()
        self.expect(",")
        f = self.component()
        self.expect(")")
        return TripleLit(t, i, f, Pos.of(tok))

    def component(self) -> ComponentLit:
        start = self.tok
        parts: list[NsInterval] = []
        if self.at("{"):
            self.advance()
            parts.append(self.point())
            while self.at(","):
                self.advance()
                parts.append(self.point())
            self.expect("}")
        else:
            parts.append(self.interval())
            while self.at("|"):
                self.advance()
                parts.append(self.interval())
        return ComponentLit(IntervalUnion(parts), Pos.of(start))

    def point(self) -> NsInterval:
        v = self.expect_number().value
        return NsInterval(v, v)

    def interval(self) -> NsInterval:
        if self.at("["):
            open_tok = self.advance()
            lo = self.expect_number().value
            self.expect(",")
            hi = self.expect_number().value
            self.expect("]")
            if hi < lo:
                raise self.error(f"inverted interval: [{lo}, {hi}]", open_tok)
            return NsInterval(lo, hi)
        if self.tok.kind == "NUMBER":
            return self.point()
        raise self.error(f"expected number, '[' or '{{', found {self.tok}")

    def stmt_eval(self) -> EvalStmt:
        pos = Pos.of(self.advance())
        return EvalStmt(self.expr(), pos)

    def stmt_check(self) -> CheckStmt:
        pos = Pos.of(self.advance())
        left = self.expr()
        self.expect("<=")
        return CheckStmt(left, self.expr(), pos)

    def stmt_classify(self) -> ClassifyStmt:
        pos = Pos.of(self.advance())
        target = self.expect_name("set or relation name").text
        if self.at("("):
            self.advance()
            args = self.namelist()
            self.expect(")")
            return ClassifyStmt(target, None, args, pos)
        self.expect(".")
        element = self.expect_name("element name").text
        return ClassifyStmt(target, element, None, pos)

    def expr(self) -> Expr:
        left = self.term()
        while self.at("|") or self.at("\\"):
            tok = self.advance()
            left = BinOp(tok.text, left, self.term(), Pos.of(tok))
        return left

    def term(self) -> Expr:
        left = self.factor()
        while self.at("&"):
            tok = self.advance()
            left = BinOp("&", left, self.factor(), Pos.of(tok))
        return left

    def factor(self) -> Expr:
        left = self.primary()
        while self.at_times():
            tok = self.advance()
            left = Product(left, self.primary(), Pos.of(tok))
        return left

    def primary(self) -> Expr:
        tok = self.tok
        if self.at("complement"):
            self.advance()
            self.expect("(")
            inner = self.expr()
            self.expect(")")
            return Complement(inner, Pos.of(tok))
        if self.at("("):
            self.advance()
            inner = self.expr()
            self.expect(")")
            return inner
        if tok.kind == "NAME":
            self.advance()
            if self.at("("):
                self.advance()
                args = self.namelist()
                self.expect(")")
                return Lookup(tok.text, args, Pos.of(tok))
            return Name(tok.text, Pos.of(tok))
        raise self.error(f"expected set expression, found {tok}")


_STATEMENTS = ("universe", "set", "relation", "eval", "check", "classify")


def parse(tokens: list[Token]) -> Script:
    return Parser(tokens).script()


def parse_source(source: str) -> Script:
    return parse(tokenize(source))
