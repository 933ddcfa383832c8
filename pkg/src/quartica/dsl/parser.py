"""Recursive-descent parser and pretty-printer for scenario files.

Grammar::

    scenario  := stmt*
    stmt      := fielddecl | letdecl | objdecl | assert | print
    fielddecl := "field" IDENT "=" "Q" "(" [IDENT ":" expr ("," IDENT ":" expr)*] ")"
    letdecl   := "let" IDENT "=" expr
    objdecl   := ("curve"|"line"|"conic"|"point"|"lines"|"points"|"conics") IDENT "=" expr
    assert    := "assert" expr [("==" | "!=") expr]
    print     := "print" expr

Expression precedence, tightest first: ``^`` (right-associative), unary
minus, ``* /``, ``+ -``.  ``(a : b : c)`` is a point literal.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from ..errors import QuarticaError
from .lexer import Span, Token, tokenize

OBJECT_KINDS = ("curve", "line", "conic", "point", "lines", "points", "conics")


class ParseError(QuarticaError):
    def __init__(self, span: Span, expected: set[str], found: str):
        self.span = span
        self.expected = frozenset(expected)
        self.found = found
        exp = ", ".join(sorted(self.expected))
        super().__init__(f"{span}: expected one of {{{exp}}}, found {found!r}")


# -- AST --------------------------------------------------------------------
@dataclass(frozen=True)
class Num:
    value: int
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class Str:
    value: str
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class Bool:
    value: bool
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class Name:
    ident: str
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class Neg:
    operand: "Expr"
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class PointLit:
    coords: tuple
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class ListLit:
    items: tuple
    span: Span = field(compare=False, default=None)


Expr = Union[Num, Str, Bool, Name, Neg, BinOp, Call, PointLit, ListLit]


@dataclass(frozen=True)
class FieldDecl:
    name: str
    levels: tuple  # of (generator name, Expr)
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class LetDecl:
    name: str
    value: Expr
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class ObjectDecl:
    kind: str
    name: str
    value: Expr
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class AssertStmt:
    left: Expr
    relop: str | None = None
    right: Expr | None = None
    span: Span = field(compare=False, default=None)


@dataclass(frozen=True)
class PrintStmt:
    value: Expr
    span: Span = field(compare=False, default=None)


Stmt = Union[FieldDecl, LetDecl, ObjectDecl, AssertStmt, PrintStmt]


@dataclass(frozen=True)
class ScenarioAst:
    statements: tuple


# -- parser -----------------------------------------------------------------
class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def _advance(self) -> Token:
        t = self.tokens[self.pos]
        if t.kind != "eof":
            self.pos += 1
        return t

    def _check(self, kind: str, lexeme: str | None = None) -> bool:
        t = self.tok
        return t.kind == kind and (lexeme is None or t.lexeme == lexeme)

    def _expect(self, kind: str, lexeme: str | None = None) -> Token:
        if self._check(kind, lexeme):
            return self._advance()
        raise ParseError(self.tok.span, {lexeme or kind}, self.tok.lexeme or self.tok.kind)

    def _join(self, start: Span, end: Span) -> Span:
        return Span(start.line, start.column, end.end_line, end.end_column)

    def _prev_span(self) -> Span:
        return self.tokens[max(self.pos - 1, 0)].span

    # statements
    def scenario(self) -> ScenarioAst:
        stmts = []
        while not self._check("eof"):
            stmts.append(self.statement())
        return ScenarioAst(tuple(stmts))

    def statement(self) -> Stmt:
        t = self.tok
        if self._check("keyword", "field"):
            return self.field_decl()
        if self._check("keyword", "let"):
            self._advance()
            name = self._expect("ident").lexeme
            self._expect("punct", "=")
            value = self.expr()
            return LetDecl(name, value, self._join(t.span, self._prev_span()))
        if t.kind == "keyword" and t.lexeme in OBJECT_KINDS:
            self._advance()
            name = self._expect("ident").lexeme
            self._expect("punct", "=")
            value = self.expr()
            return ObjectDecl(t.lexeme, name, value, self._join(t.span, self._prev_span()))
        if self._check("keyword", "assert"):
            self._advance()
            left = self.expr()
            if self._check("punct", "==") or self._check("punct", "!="):
                op = self._advance().lexeme
                right = self.expr()
                return AssertStmt(left, op, right, self._join(t.span, self._prev_span()))
            return AssertStmt(left, None, None, self._join(t.span, self._prev_span()))
        if self._check("keyword", "print"):
            self._advance()
            value = self.expr()
            return PrintStmt(value, self._join(t.span, self._prev_span()))
        raise ParseError(
            t.span, {"field", "let", "assert", "print", *OBJECT_KINDS}, t.lexeme or t.kind
        )

    def field_decl(self) -> FieldDecl:
        start = self._advance().span
        name = self._expect("ident").lexeme
        self._expect("punct", "=")
        q = self._expect("ident")
        if q.lexeme != "Q":
            raise ParseError(q.span, {"Q"}, q.lexeme)
        self._expect("punct", "(")
        levels = []
        if not self._check("punct", ")"):
            while True:
                gen = self._expect("ident").lexeme
                self._expect("punct", ":")
                levels.append((gen, self.expr()))
                if self._check("punct", ","):
                    self._advance()
                    continue
                break
        self._expect("punct", ")")
        return FieldDecl(name, tuple(levels), self._join(start, self._prev_span()))

    # expressions
    def expr(self) -> Expr:
        left = self.term()
        while self._check("punct", "+") or self._check("punct", "-"):
            op = self._advance().lexeme
            right = self.term()
            left = BinOp(op, left, right, self._join(left.span, right.span))
        return left

    def term(self) -> Expr:
        left = self.unary()
        while self._check("punct", "*") or self._check("punct", "/"):
            op = self._advance().lexeme
            right = self.unary()
            left = BinOp(op, left, right, self._join(left.span, right.span))
        return left

    def unary(self) -> Expr:
        if self._check("punct", "-"):
            t = self._advance()
            operand = self.unary()
            return Neg(operand, self._join(t.span, operand.span))
        return self.power()

    def power(self) -> Expr:
        base = self.primary()
        if self._check("punct", "^"):
            self._advance()
            exponent = self.unary()
            return BinOp("^", base, exponent, self._join(base.span, exponent.span))
        return base

    def primary(self) -> Expr:
        t = self.tok
        if t.kind == "integer":
            self._advance()
            return Num(int(t.lexeme), t.span)
        if t.kind == "string":
            self._advance()
            return Str(t.lexeme, t.span)
        if t.kind == "keyword" and t.lexeme in ("true", "false"):
            self._advance()
            return Bool(t.lexeme == "true", t.span)
        if t.kind == "ident":
            self._advance()
            if self._check("punct", "("):
                self._advance()
                args = []
                if not self._check("punct", ")"):
                    args.append(self.expr())
                    while self._check("punct", ","):
                        self._advance()
                        args.append(self.expr())
                self._expect("punct", ")")
                return Call(t.lexeme, tuple(args), self._join(t.span, self._prev_span()))
            return Name(t.lexeme, t.span)
        if self._check("punct", "("):
            self._advance()
            first = self.expr()
            if self._check("punct", ":"):
                self._advance()
                second = self.expr()
                self._expect("punct", ":")
                third = self.expr()
                self._expect("punct", ")")
                return PointLit((first, second, third), self._join(t.span, self._prev_span()))
            self._expect("punct", ")")
            return first
        if self._check("punct", "["):
            self._advance()
            items = []
            if not self._check("punct", "]"):
                items.append(self.expr())
                while self._check("punct", ","):
                    self._advance()
                    items.append(self.expr())
            self._expect("punct", "]")
            return ListLit(tuple(items), self._join(t.span, self._prev_span()))
        raise ParseError(
            t.span, {"integer", "identifier", "string", "(", "[", "-"}, t.lexeme or t.kind
        )


def parse(source: str | list[Token]) -> ScenarioAst:
    tokens = tokenize(source) if isinstance(source, str) else source
    return _Parser(tokens).scenario()


def parse_expression(source: str) -> Expr:
    p = _Parser(tokenize(source))
    e = p.expr()
    if not p._check("eof"):
        raise ParseError(p.tok.span, {"end of input"}, p.tok.lexeme)
    return e


# -- printer ----------------------------------------------------------------
_PREC = {"+": 1, "-": 1, "*": 2, "/": 2, "^": 4}
_ATOM = 5


def _prec(e: Expr) -> int:
    if isinstance(e, BinOp):
        return _PREC[e.op]
    if isinstance(e, Neg):
        return 3
    return _ATOM


def _wrap(e: Expr, min_prec: int) -> str:
    text = format_expr(e)
    return text if _prec(e) >= min_prec else f"({text})"


def format_expr(e: Expr) -> str:
    """Canonical text of an expression, with only the parentheses it needs."""
    if isinstance(e, Num):
        return str(e.value)
    if isinstance(e, Str):
        return f'"{e.value}"'
    if isinstance(e, Bool):
        return "true" if e.value else "false"
    if isinstance(e, Name):
        return e.ident
    if isinstance(e, Neg):
        return "-" + _wrap(e.operand, 3)
    if isinstance(e, BinOp):
        p = _PREC[e.op]
        if e.op == "^":
            return f"{_wrap(e.left, _ATOM)}^{_wrap(e.right, 3)}"
        sep = f" {e.op} " if p == 1 else e.op
        return _wrap(e.left, p) + sep + _wrap(e.right, p + 1)
    if isinstance(e, Call):
        return f"{e.func}(" + ", ".join(format_expr(a) for a in e.args) + ")"
    if isinstance(e, PointLit):
        return "(" + " : ".join(format_expr(a) for a in e.coords) + ")"
    if isinstance(e, ListLit):
        return "[" + ", ".join(format_expr(a) for a in e.items) + "]"
    raise TypeError(f"not an expression node: {e!r}")


def format_statement(s: Stmt) -> str:
    if isinstance(s, FieldDecl):
        body = ", ".join(f"{g}: {format_expr(v)}" for g, v in s.levels)
        return f"field {s.name} = Q({body})"
    if isinstance(s, LetDecl):
        return f"let {s.name} = {format_expr(s.value)}"
    if isinstance(s, ObjectDecl):
        return f"{s.kind} {s.name} = {format_expr(s.value)}"
    if isinstance(s, AssertStmt):
        if s.relop is None:
            return f"assert {format_expr(s.left)}"
        return f"assert {format_expr(s.left)} {s.relop} {format_expr(s.right)}"
    if isinstance(s, PrintStmt):
        return f"print {format_expr(s.value)}"
    raise TypeError(f"not a statement node: {s!r}")


def format_scenario(ast: ScenarioAst) -> str:
    return "\n".join(format_statement(s) for s in ast.statements) + "\n"
