import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from neutrosophic.dsl import (
    DiagnosticError,
    format_expr,
    format_set_decl,
    format_value,
    parse_component,
    parse_number,
    parse_source,
    parse_triple,
    run_source,
    tokenize,
)
from neutrosophic.dsl.parser import BinOp, Complement, EvalStmt, Name, Product, SetDecl
from neutrosophic.hyperreal import ONE_PLUS, NonStdValue
from neutrosophic.ndset import IntervalUnion
from neutrosophic.neutroset import NeutroSet, intersect, set_apply, triple

from strategies import random_triple, triples, unions

U = IntervalUnion.of
V = NonStdValue

HEADER = "universe U = {x, y, z}\n"


def diag(source):
    with pytest.raises(DiagnosticError) as info:
        run_source(source)
    return info.value


class TestLexer:
    def test_nonstandard_literal(self):
        toks = tokenize("1^+")
        assert toks[0].kind == "NUMBER" and toks[0].value == ONE_PLUS

    def test_triple_tokens(self):
        kinds = [t.kind for t in tokenize("(0.5, 0.2, 0.3)")][:7]
        assert kinds == ["PUNCT", "NUMBER", "PUNCT", "NUMBER", "PUNCT", "NUMBER", "PUNCT"]

    def test_bad_character(self):
        err = diag("0.5$")
        assert err.phase == "lex"
        assert (err.diagnostic.line, err.diagnostic.column) == (1, 4)

    def test_coefficient_and_comment(self):
        toks = tokenize("0.7^-2 # trailing\n0^-")
        values = [t.value for t in toks if t.kind == "NUMBER"]
        assert values == [V(0.7, -2), V(0, -1)]

    def test_keywords_and_times(self):
        toks = tokenize("eval A x B")
        assert [(t.kind, t.text) for t in toks[:4]] == [
            ("KEYWORD", "eval"),
            ("NAME", "A"),
            ("NAME", "x"),
            ("NAME", "B"),
        ]

    def test_newlines_inside_brackets_are_ignored(self):
        toks = tokenize("{ x:\n (0, 0, 1) }")
        assert [t.kind for t in toks].count("NEWLINE") == 1


class TestParser:
    def test_general_example_set(self):
        script = parse_source(
            "set B over U { y: ([0.20,0.30], [0.40,0.45]|[0.50,0.51], {0.20,0.24,0.28}) }"
        )
        (stmt,) = script.statements
        assert isinstance(stmt, SetDecl)
        (_, _, lit) = stmt.entries[0]
        assert lit.components[1].value == U((0.4, 0.45), (0.5, 0.51))

    def test_eval_complement(self):
        (stmt,) = parse_source("eval complement(A)").statements
        assert isinstance(stmt, EvalStmt)
        assert stmt.expr == Complement(Name("A", stmt.expr.operand.pos), stmt.expr.pos)

    def test_short_triple(self):
        err = diag("set A over U { x: (0.5, 0.2) }")
        assert err.phase == "parse"
        assert err.diagnostic.message.startswith("expected ','")
        assert err.diagnostic.column == 28

    def test_precedence(self):
        (stmt,) = parse_source("eval A | B & C x D").statements
        e = stmt.expr
        assert isinstance(e, BinOp) and e.op == "|"
        assert isinstance(e.right, BinOp) and e.right.op == "&"
        assert isinstance(e.right.right, Product)

    def test_one_statement_per_line(self):
        err = diag("eval A eval B")
        assert err.phase == "parse"

    def test_multi_line_positions(self):
        err = diag("universe U = {x}\n\n  check A <=")
        assert (err.diagnostic.line, err.diagnostic.column) == (3, 13)


class TestEvaluator:
    def test_complement(self):
        (r,) = run_source(HEADER + "set A over U {x:(0.5,0.2,0.3)}\neval complement(A)")
        assert r.value["x"] == triple(V(0.5, 1), V(0.8, 1), V(0.7, 1))
        assert format_value(r.value) == "{x: (0.5^+, 0.8^+, 0.7^+), y: (1^+, 1^+, 0^+), z: (1^+, 1^+, 0^+)}"

    def test_check_reflexive(self):
        (r,) = run_source(HEADER + "set A over U {x:(0.5,0.2,0.3)}\ncheck A <= A")
        assert r.value is True

    def test_classify_paraconsistent(self):
        (r,) = run_source(
            HEADER
            + "set B over U { y: ([0.20,0.30], [0.40,0.45]|[0.50,0.51], {0.20,0.24,0.28}) }\n"
            + "classify B.y"
        )
        assert "paraconsistent" in r.value.labels

    def test_undeclared(self):
        err = diag("eval Q")
        assert err.phase == "eval"
        assert (err.diagnostic.line, err.diagnostic.column) == (1, 6)

    def test_universe_mismatch(self):
        err = diag(
            "universe U = {x}\nuniverse W = {x, y}\nset A over U {}\nset B over W {}\neval A & B"
        )
        assert "universe mismatch" in err.diagnostic.message
        assert err.diagnostic.line == 5

    def test_cartesian_misuse(self):
        err = diag(HEADER + "set A over U {}\neval complement(A x A)")
        assert err.phase == "eval"

    def test_redeclaration(self):
        err = diag(HEADER + "set A over U {}\nset A over U {}")
        assert err.diagnostic.line == 3

    def test_out_of_range_literal(self):
        err = diag(HEADER + "set A over U { x: (1.2, 0, 0) }")
        assert err.phase == "eval"
        (r,) = run_source(
            HEADER + "set A over U { x: (1.2, 0, 0) }\neval A", strict_literals=False
        )
        assert r.value["x"].T == U(ONE_PLUS)

    def test_relation(self):
        results = run_source(
            HEADER + "relation R over U x U { (x, y): (0.7, 0.1, 0.2) }\neval R(x, y)\neval R(y, x)"
        )
        assert [r.value for r in results] == [triple(0.7, 0.1, 0.2), triple(0, 0, 1)]
        err = diag(HEADER + "relation R over U x U {}\neval R(x)")
        assert "tuple outside relation signature" in err.diagnostic.message

    def test_product(self):
        (r,) = run_source(HEADER + "set A over U {}\neval A x A")
        assert len(list(r.value.tuples())) == 9

    def test_deterministic(self, data_dir):
        src = (data_dir / "general_examples.ns").read_text()
        a = [format_value(r.value) for r in run_source(src)]
        b = [format_value(r.value) for r in run_source(src)]
        assert a == b


def test_ampersand_equals_intersect_on_random_sets():
    rng = random.Random(7)
    names = ("x", "y", "z")
    for _ in range(100):
        A = NeutroSet(names, {n: random_triple(rng, coeff=True) for n in names if rng.random() < 0.8})
        B = NeutroSet(names, {n: random_triple(rng, coeff=True) for n in names if rng.random() < 0.8})
        src = HEADER + format_set_decl("A", "U", A) + "\n" + format_set_decl("B", "U", B) + "\neval A & B"
        (r,) = run_source(src)
        assert r.value == set_apply("intersect", A, B)
        assert all(r.value[n] == intersect(A[n], B[n]) for n in names)


class TestFormat:
    def test_triple(self):
        assert format_value(triple(0.5, 0.2, 0.3)) == "(0.5, 0.2, 0.3)"

    def test_union(self):
        assert format_value(U((0.4, 0.45), (0.5, 0.51))) == "[0.4,0.45]|[0.5,0.51]"

    def test_endpoint(self):
        assert format_value(ONE_PLUS) == "1^+"

    def test_bool(self):
        assert format_value(False) == "false"

    def test_expr_parens(self):
        (stmt,) = parse_source("eval (A | B) & complement(C \\ (D | E))").statements
        assert format_expr(stmt.expr) == "(A | B) & complement(C \\ (D | E))"

    def test_parse_helpers(self):
        assert parse_number("0.2^+0.2") == V(0.2, 0.2)
        assert parse_component("{0.2,0.24}") == U(0.2, 0.24)
        assert parse_triple("(1^+, 0, [0.1,0.2])") == triple(ONE_PLUS, 0, U((0.1, 0.2)))
        with pytest.raises(DiagnosticError):
            parse_triple("(1.5, 0, 0)")
        assert parse_triple("(1.5, 0, 0)", strict=False).T == U(ONE_PLUS)


@given(triples)
def test_triple_roundtrip(x):
    text = format_value(x)
    assert parse_triple(text) == x
    assert format_value(parse_triple(text)) == text


@given(unions())
def test_component_roundtrip(s):
    assert parse_component(format_value(s)) == s


@given(st.lists(triples, min_size=0, max_size=3))
def test_set_roundtrip(ts):
    names = ("x", "y", "z")
    S = NeutroSet(names, dict(zip(names, ts)))
    (r,) = run_source(HEADER + format_set_decl("S", "U", S) + "\neval S")
    assert r.value == S
