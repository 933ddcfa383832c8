from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quartica.dsl import EvalError, LexError, ParseError, evaluate, evaluate_expression, format_scenario, parse, parse_expression, tokenize
from quartica.dsl.parser import AssertStmt, BinOp, Call, FieldDecl, LetDecl, ListLit, Name, Neg, Num, ObjectDecl, PointLit, ScenarioAst, format_expr
from quartica.field import make_tower

FERMAT_HEADER = """
field F = Q(i: -1, r2: 2, q2: r2)
let eps = (1+i)*r2/2
curve C = x^4 + y^4 + z^4
lines LF = atlas("fermat.mtl")
"""


def _kinds(text):
    return [(t.kind, t.lexeme) for t in tokenize(text)[:-1]]


def test_tokenize_let():
    assert _kinds("let a = 1/2") == [
        ("keyword", "let"), ("ident", "a"), ("punct", "="), ("integer", "1"), ("punct", "/"), ("integer", "2"),
    ]


def test_tokenize_curve_declaration():
    # curve F = then x ^ 4 + y ^ 4 + z ^ 4
    assert len(tokenize("curve F = x^4+y^4+z^4")[:-1]) == 14


def test_lex_error_column():
    with pytest.raises(LexError) as err:
        tokenize("let b = @")
    assert (err.value.span.line, err.value.span.column) == (1, 9)


def test_spans_cover_the_tokens():
    text = "assert  tvector(LF)\n  == [48,0,3]  # comment"
    for t in tokenize(text)[:-1]:
        line = text.split("\n")[t.span.line - 1]
        assert line[t.span.column - 1 : t.span.end_column - 1] == t.lexeme


def test_parse_examples():
    (s,) = parse("assert tvector(LF) == [48,0,3]").statements
    assert isinstance(s, AssertStmt) and isinstance(s.left, Call) and isinstance(s.right, ListLit)
    (p,) = parse("point P = (1 : eps^3 : 0)").statements
    assert isinstance(p, ObjectDecl) and p.kind == "point" and isinstance(p.value, PointLit)
    f, e = parse("field F = Q(i: -1, r2: 2, q2: r2)\nlet eps = (1+i)*r2/2").statements
    assert isinstance(f, FieldDecl) and [g for g, _ in f.levels] == ["i", "r2", "q2"]
    assert isinstance(e, LetDecl)


def test_precedence():
    assert parse_expression("-x^2") == Neg(BinOp("^", Name("x"), Num(2)))
    assert parse_expression("a^b^c") == BinOp("^", Name("a"), BinOp("^", Name("b"), Name("c")))
    assert parse_expression("a-b-c") == BinOp("-", BinOp("-", Name("a"), Name("b")), Name("c"))
    assert parse_expression("a+b*c") == BinOp("+", Name("a"), BinOp("*", Name("b"), Name("c")))


def test_parse_error_has_span_and_expected_set():
    with pytest.raises(ParseError) as err:
        parse("let = 3")
    assert err.value.span.column == 5 and "ident" in err.value.expected
    with pytest.raises(ParseError):
        parse("field F = R(i: -1)")


names = st.sampled_from(["x", "y", "z", "eps", "LF", "P1"])
leaves = st.one_of(st.integers(0, 99).map(Num), names.map(Name))


def _extend(children):
    return st.one_of(
        st.tuples(st.sampled_from("+-*/^"), children, children).map(lambda t: BinOp(*t)),
        children.map(Neg),
        st.tuples(st.sampled_from(["tvector", "meet", "contact"]), st.lists(children, max_size=3)).map(lambda t: Call(t[0], tuple(t[1]))),
        st.lists(children, max_size=3).map(lambda xs: ListLit(tuple(xs))),
        st.tuples(children, children, children).map(PointLit),
    )


exprs = st.recursive(leaves, _extend, max_leaves=12)
stmts = st.one_of(
    st.tuples(names, exprs).map(lambda t: LetDecl(*t)),
    st.tuples(st.sampled_from(["curve", "line", "points"]), names, exprs).map(lambda t: ObjectDecl(*t)),
    st.tuples(exprs, st.sampled_from(["==", "!="]), exprs).map(lambda t: AssertStmt(*t)),
    exprs.map(AssertStmt),
)


@settings(max_examples=300)
@given(st.lists(stmts, max_size=6))
def test_parse_print_round_trip(statements):
    ast = ScenarioAst(tuple(statements))
    text = format_scenario(ast)
    again = parse(text)
    assert again == ast
    assert format_scenario(again) == text


def test_scenario_assertions():
    src = FERMAT_HEADER + """
assert eps^4 == -1
assert tvector(LF) == [48, 0, 3]
point P1 = (1 : eps : 0)
point P2 = (1 : eps^3 : 0)
point P3 = (1 : eps^5 : 0)
point P4 = (1 : eps^7 : 0)
assert harmonic(P1, P2, P3, P4)
line L1 = x - eps*y
point T1 = (1 : eps^7 : 0)
assert on(T1, L1)
assert contact(C, L1, T1) == 4
assert contact(C, L1, T1) == 5
"""
    result = evaluate(src)
    statuses = [c.status for c in result.checks]
    assert statuses == ["pass", "pass", "pass", "pass", "pass", "fail"]
    last = result.checks[-1]
    assert last.computed == "4" and last.expected == "5"
    assert last.span.line == src.count("\n", 0, src.index("== 5")) + 1


def test_polynomials_compare_up_to_scalar():
    result = evaluate("curve C = x^4 + y^4 + z^4\nassert hessian(C) == x^2*y^2*z^2\nassert hessian(C) != x*y*z^3")
    assert result.passed


def test_errors_carry_spans_and_do_not_stop_evaluation():
    result = evaluate("assert nothing == 1\nassert 1 + 1 == 2\nassert atlas(\"no.such.id\") == 1")
    assert [c.status for c in result.checks] == ["error", "pass", "error"]
    assert result.checks[0].span.line == 1 and "nothing" in result.checks[0].computed
    assert "UnknownId" in result.checks[2].computed


def test_declaration_errors_raise():
    with pytest.raises(EvalError) as err:
        evaluate("let a = 1\nline L = x^2")
    assert err.value.span.line == 2
    with pytest.raises(EvalError):
        evaluate("field F = Q(i: -1)\nfield G = Q(i: -1)")
    with pytest.raises(EvalError):
        evaluate("field F = Q(a: 4)")


def test_tower_mismatch_is_reported():
    result = evaluate('field F = Q(i: -1)\nassert atlas("kk.quartic") == 0')
    assert result.checks[0].status == "error" and "TowerMismatch" in result.checks[0].computed


def test_json_report_shape():
    result = evaluate("assert 2 == 2")
    data = result.to_json()
    assert list(data) == ["checks"]
    assert set(data["checks"][0]) == {"span", "text", "status", "computed", "expected"}


def test_evaluate_expression():
    T = make_tower("Q(i:-1,r2:2)")
    assert evaluate_expression("((1+i)*r2/2)^8", T) == 1
    assert str(evaluate_expression("(x + i*y)*(x - i*y)", T)) == "x^2 + y^2"


def test_format_expr_is_minimal():
    assert format_expr(parse_expression("((1+i)*r2)/2")) == "(1 + i)*r2/2"
