"""Tree-walking evaluator for parsed scripts.

Operators map onto the set operations: ``&`` intersection, ``|`` union,
``\\`` difference, ``complement(...)``, ``x`` Cartesian product and ``<=``
inclusion. Declarations are immutable; re-declaring a name is an error.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Union

from ..neutroset import (
    NeutroProduct,
    NeutroRelation,
    NeutroSet,
    NeutroTriple,
    complement,
    difference,
    intersect,
    is_subset,
    relation_get,
    set_apply,
    set_product,
    union,
)
from ..taxonomy import Classification, classify_triple
from .diagnostics import Diagnostic, DiagnosticError
from .format import format_expr
from .parser import (
    BinOp,
    CheckStmt,
    ClassifyStmt,
    Complement,
    EvalStmt,
    Lookup,
    Name,
    Pos,
    Product,
    RelationDecl,
    Script,
    SetDecl,
    TripleLit,
    UniverseDecl,
    parse_source,
)

__all__ = ["Result", "Environment", "Evaluator", "evaluate", "run_source"]

Value = Union[NeutroSet, NeutroProduct, NeutroTriple, NeutroRelation, bool, Classification]

_SET_OPS = {"&": "intersect", "|": "union", "\\": "difference"}
_TRIPLE_OPS = {"&": intersect, "|": union, "\\": difference}


@dataclass(frozen=True)
class Result:
    """Outcome of one ``eval``, ``check`` or ``classify`` statement."""

    kind: str  # set | product | triple | relation | check | classify
    statement: str
    line: int
    value: Any
    triple: NeutroTriple | None = None  # the classified triple, for classify


@dataclass
class Environment:
    universes: dict[str, tuple[str, ...]] = field(default_factory=dict)
    sets: dict[str, NeutroSet] = field(default_factory=dict)
    relations: dict[str, NeutroRelation] = field(default_factory=dict)
    set_universe: dict[str, str] = field(default_factory=dict)

    def declared(self, name: str) -> bool:
        return name in self.universes or name in self.sets or name in self.relations


def _fail(pos: Pos, message: str) -> DiagnosticError:
    return DiagnosticError(Diagnostic(pos.line, pos.column, message), phase="eval")


class Evaluator:
    """Evaluates statements against a persistent :class:`Environment`.

    The REPL keeps one evaluator alive across lines; script runs use a fresh
    one. With ``strict_literals`` (the default) a literal endpoint outside
    ``[0^-, 1^+]`` is an error; otherwise it is clamped.
    """

    def __init__(self, strict_literals: bool = True) -> None:
        self.env = Environment()
        self.strict_literals = strict_literals

    def run(self, script: Script) -> list[Result]:
        results = []
        for stmt in script.statements:
            result = self.execute(stmt)
            if result is not None:
                results.append(result)
        return results

    def execute(self, stmt) -> Result | None:
        if isinstance(stmt, UniverseDecl):
            self._declare_universe(stmt)
        elif isinstance(stmt, SetDecl):
            self._declare_set(stmt)
        elif isinstance(stmt, RelationDecl):
            self._declare_relation(stmt)
        elif isinstance(stmt, EvalStmt):
            return self._eval(stmt)
        elif isinstance(stmt, CheckStmt):
            return self._check(stmt)
        elif isinstance(stmt, ClassifyStmt):
            return self._classify(stmt)
        else:
            raise TypeError(f"unknown statement {stmt!r}")
        return None

    # declarations

    def _fresh(self, name: str, pos: Pos) -> None:
        if self.env.declared(name):
            raise _fail(pos, f"'{name}' is already declared")

    def _universe(self, name: str, pos: Pos) -> tuple[str, ...]:
        try:
            return self.env.universes[name]
        except KeyError:
            raise _fail(pos, f"undeclared universe '{name}'") from None

    def _declare_universe(self, stmt: UniverseDecl) -> None:
        self._fresh(stmt.name, stmt.pos)
        seen: set[str] = set()
        for element, pos in stmt.elements:
            if element in seen:
                raise _fail(pos, f"duplicate element '{element}' in universe '{stmt.name}'")
            seen.add(element)
        self.env.universes[stmt.name] = tuple(e for e, _ in stmt.elements)

    def _triple(self, lit: TripleLit) -> NeutroTriple:
        comps = [c.value for c in lit.components]
        if not self.strict_literals:
            return NeutroTriple.clamped(*comps)
        for label, c in zip("TIF", lit.components):
            try:
                NeutroTriple(c.value, c.value, c.value)
            except ValueError:
                raise _fail(c.pos, f"component {label}={c.value} leaves [0^-, 1^+]") from None
        return NeutroTriple(*comps)

    def _declare_set(self, stmt: SetDecl) -> None:
        self._fresh(stmt.name, stmt.pos)
        universe = self._universe(stmt.universe, stmt.universe_pos)
        membership: dict[str, NeutroTriple] = {}
        for element, pos, lit in stmt.entries:
            if element not in universe:
                raise _fail(pos, f"'{element}' is not in universe '{stmt.universe}'")
            if element in membership:
                raise _fail(pos, f"duplicate entry for '{element}'")
            membership[element] = self._triple(lit)
        self.env.sets[stmt.name] = NeutroSet(universe, membership)
        self.env.set_universe[stmt.name] = stmt.universe

    def _declare_relation(self, stmt: RelationDecl) -> None:
        self._fresh(stmt.name, stmt.pos)
        domains = tuple(self._universe(name, pos) for name, pos in stmt.domains)
        tuples: dict[tuple[str, ...], NeutroTriple] = {}
        for key, pos, lit in stmt.entries:
            if len(key) != len(domains) or any(n not in d for n, d in zip(key, domains)):
                raise _fail(pos, "tuple outside relation signature")
            if key in tuples:
                raise _fail(pos, f"duplicate entry for ({', '.join(key)})")
            tuples[key] = self._triple(lit)
        self.env.relations[stmt.name] = NeutroRelation(domains, tuples)

    # expressions

    def value(self, expr) -> Value:
        if isinstance(expr, Name):
            return self._name(expr)
        if isinstance(expr, Lookup):
            return self._lookup(expr)
        if isinstance(expr, Complement):
            operand = self.value(expr.operand)
            if isinstance(operand, NeutroSet):
                return set_apply("complement", operand)
            if isinstance(operand, NeutroTriple):
                return complement(operand)
            raise _fail(expr.pos, f"complement of a {_describe(operand)} is not defined")
        if isinstance(expr, BinOp):
            left, right = self.value(expr.left), self.value(expr.right)
            if isinstance(left, NeutroSet) and isinstance(right, NeutroSet):
                if left.universe != right.universe:
                    raise _fail(expr.pos, "universe mismatch")
                return set_apply(_SET_OPS[expr.op], left, right)
            if isinstance(left, NeutroTriple) and isinstance(right, NeutroTriple):
                return _TRIPLE_OPS[expr.op](left, right)
            raise _fail(
                expr.pos,
                f"'{expr.op}' needs two sets or two triples, got {_describe(left)} and {_describe(right)}",
            )
        if isinstance(expr, Product):
            left, right = self.value(expr.left), self.value(expr.right)
            for side in (left, right):
                if not isinstance(side, (NeutroSet, NeutroProduct)):
                    raise _fail(expr.pos, f"Cartesian product of a {_describe(side)} is not defined")
            return set_product(left, right)
        raise TypeError(f"unknown expression {expr!r}")

    def _name(self, expr: Name) -> Value:
        env = self.env
        if expr.name in env.sets:
            return env.sets[expr.name]
        if expr.name in env.relations:
            return env.relations[expr.name]
        if expr.name in env.universes:
            raise _fail(expr.pos, f"'{expr.name}' is a universe, not a set")
        raise _fail(expr.pos, f"undeclared name '{expr.name}'")

    def _lookup(self, expr: Lookup) -> NeutroTriple:
        if expr.name not in self.env.relations:
            if self.env.declared(expr.name):
                raise _fail(expr.pos, f"'{expr.name}' is not a relation")
            raise _fail(expr.pos, f"undeclared relation '{expr.name}'")
        try:
            return relation_get(self.env.relations[expr.name], expr.args)
        except KeyError:
            raise _fail(expr.pos, "tuple outside relation signature") from None

    # statements

    def _eval(self, stmt: EvalStmt) -> Result:
        value = self.value(stmt.expr)
        text = f"eval {format_expr(stmt.expr)}"
        if isinstance(value, NeutroSet):
            kind = "set"
        elif isinstance(value, NeutroProduct):
            kind = "product"
        elif isinstance(value, NeutroTriple):
            kind = "triple"
        else:
            kind = "relation"
        return Result(kind, text, stmt.pos.line, value)

    def _check(self, stmt: CheckStmt) -> Result:
        left, right = self.value(stmt.left), self.value(stmt.right)
        text = f"check {format_expr(stmt.left)} <= {format_expr(stmt.right)}"
        if isinstance(left, NeutroSet) and isinstance(right, NeutroSet):
            if left.universe != right.universe:
                raise _fail(stmt.pos, "universe mismatch")
            holds = all(is_subset(left[n], right[n]) for n in left.universe)
        elif isinstance(left, NeutroTriple) and isinstance(right, NeutroTriple):
            holds = is_subset(left, right)
        else:
            raise _fail(
                stmt.pos,
                f"'<=' needs two sets or two triples, got {_describe(left)} and {_describe(right)}",
            )
        return Result("check", text, stmt.pos.line, holds)

    def _classify(self, stmt: ClassifyStmt) -> Result:
        if stmt.args is not None:
            x = self._lookup(Lookup(stmt.target, stmt.args, stmt.pos))
            text = f"classify {stmt.target}({', '.join(stmt.args)})"
        else:
            if stmt.target not in self.env.sets:
                if self.env.declared(stmt.target):
                    raise _fail(stmt.pos, f"'{stmt.target}' is not a set")
                raise _fail(stmt.pos, f"undeclared set '{stmt.target}'")
            s = self.env.sets[stmt.target]
            if stmt.element not in s.universe:
                raise _fail(stmt.pos, f"'{stmt.element}' is not in the universe of '{stmt.target}'")
            x = s[stmt.element]
            text = f"classify {stmt.target}.{stmt.element}"
        return Result("classify", text, stmt.pos.line, classify_triple(x), triple=x)


def _describe(value: Value) -> str:
    if isinstance(value, NeutroSet):
        return "set"
    if isinstance(value, NeutroProduct):
        return "product"
    if isinstance(value, NeutroTriple):
        return "triple"
    if isinstance(value, NeutroRelation):
        return "relation"
    return type(value).__name__


def evaluate(script: Script, strict_literals: bool = True) -> list[Result]:
    return Evaluator(strict_literals).run(script)


def run_source(source: str, strict_literals: bool = True) -> list[Result]:
    """Lex, parse and evaluate ``source``; raises :class:`DiagnosticError`."""
    return evaluate(parse_source(source), strict_literals)
