"""Evaluation of scenario files against the kernel.

Values are field elements, forms in x, y, z, points, lines, conics, curves,
lists, integers, strings and booleans.  Comparison in ``assert`` is
projective where that is the natural notion: forms, points, lines, conics
and curves compare up to a nonzero scalar, lists of geometric objects
compare as multisets, all other lists elementwise.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any

from .. import atlas as _atlas
from ..census import conic_census
from ..contact import PlaneCurve, biosculating_conics, contact_order, hessian, mtl_verify, sextactic_classify
from ..errors import FieldTooSmall, QuarticaError
from ..field import QQ, FieldElement, TowerField, make_tower
from ..geometry import Conic, ProjLine, ProjPoint, cross_ratio, dualize, is_harmonic, join, line_census, meet
from ..ideals import PointSet, hilbert_function, variety_containment, verify_complete_intersection
from ..poly import MultiPoly
from .lexer import Span
from .parser import (
    AssertStmt,
    BinOp,
    Bool,
    Call,
    FieldDecl,
    LetDecl,
    ListLit,
    Name,
    Neg,
    Num,
    ObjectDecl,
    PointLit,
    PrintStmt,
    ScenarioAst,
    Str,
    format_expr,
    format_statement,
    parse,
)

GEOMETRIC = (ProjPoint, ProjLine, Conic, PlaneCurve)


class EvalError(QuarticaError):
    def __init__(self, message: str, span: Span | None = None):
        super().__init__(f"{span}: {message}" if span else message)
        self.span = span
        self.detail = message


def _span_json(span: Span | None) -> dict | None:
    if span is None:
        return None
    return {"line": span.line, "column": span.column, "end_line": span.end_line, "end_column": span.end_column}


@dataclass
class AssertOutcome:
    span: Span
    text: str
    status: str  # pass | fail | error | inconclusive
    computed: str | None = None
    expected: str | None = None

    def to_json(self) -> dict:
        return {"span": _span_json(self.span), "text": self.text, "status": self.status, "computed": self.computed, "expected": self.expected}


@dataclass
class ScenarioResult:
    checks: list[AssertOutcome] = field(default_factory=list)
    output: list[str] = field(default_factory=list)
    bindings: dict = field(default_factory=dict)
    tower: TowerField = QQ

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    @property
    def statuses(self) -> list[str]:
        return [c.status for c in self.checks]

    def to_json(self) -> dict:
        return {"checks": [c.to_json() for c in self.checks]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def text_report(self) -> str:
        lines = list(self.output)
        for c in self.checks:
            line = f"{c.span}: {c.status.upper():12} {c.text}"
            if c.status != "pass":
                line += f"  (computed {c.computed}, expected {c.expected})"
            lines.append(line)
        n = sum(c.status == "pass" for c in self.checks)
        lines.append(f"{n}/{len(self.checks)} assertions passed")
        return "\n".join(lines)


# -- value helpers --------------------------------------------------------------
def show(v: Any) -> str:
    if isinstance(v, PlaneCurve):
        return str(v.form)
    if isinstance(v, list):
        return "[" + ", ".join(show(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _proportional(a: MultiPoly, b: MultiPoly) -> bool:
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    T = a.tower if a.tower.degree >= b.tower.degree else b.tower
    a, b = a.lift(T), b.lift(T)
    mono = next(iter(a.sorted_terms()))[0]
    cb = b.coefficient(mono)
    if not cb:
        return False
    return a * cb == b * a.coefficient(mono)


def _sort_key(v):
    return v.sort_key() if hasattr(v, "sort_key") else str(v)


def values_equal(a: Any, b: Any) -> bool:
    if isinstance(a, PlaneCurve):
        a = a.form
    if isinstance(b, PlaneCurve):
        b = b.form
    if isinstance(a, list) and isinstance(b, list):
        if len(a) != len(b):
            return False
        if a and all(isinstance(x, GEOMETRIC + (MultiPoly,)) for x in a + b):
            rest = list(b)
            for x in a:
                hit = next((k for k, y in enumerate(rest) if values_equal(x, y)), None)
                if hit is None:
                    return False
                rest.pop(hit)
            return True
        return all(values_equal(x, y) for x, y in zip(a, b))
    if isinstance(a, MultiPoly) or isinstance(b, MultiPoly):
        if not isinstance(a, MultiPoly):
            a = MultiPoly.const(b.tower, a)
        if not isinstance(b, MultiPoly):
            b = MultiPoly.const(a.tower, b)
        return _proportional(a, b)
    if isinstance(a, (bool, str)) or isinstance(b, (bool, str)):
        return type(a) is type(b) and a == b
    if isinstance(a, (int, FieldElement)) and isinstance(b, (int, FieldElement)):
        return (a - b) == 0
    return a == b


# -- the evaluator ----------------------------------------------------------------
class Evaluator:
    def __init__(self, tower: TowerField = QQ):
        self.tower = tower
        self.env: dict[str, Any] = {}
        self.field_declared = False
        self.result = ScenarioResult(tower=tower)

    def run(self, ast: ScenarioAst) -> ScenarioResult:
        for stmt in ast.statements:
            self.statement(stmt)
        self.result.bindings = dict(self.env)
        self.result.tower = self.tower
        return self.result

    # statements
    def statement(self, s) -> None:
        if isinstance(s, FieldDecl):
            self.field_decl(s)
        elif isinstance(s, LetDecl):
            self.env[s.name] = self._guard(lambda: self.expr(s.value), s.span)
        elif isinstance(s, ObjectDecl):
            self.env[s.name] = self._guard(lambda: self.object_decl(s), s.span)
        elif isinstance(s, PrintStmt):
            v = self._guard(lambda: self.expr(s.value), s.span)
            self.result.output.append(f"{format_expr(s.value)} = {show(v)}")
        elif isinstance(s, AssertStmt):
            self.result.checks.append(self.assertion(s))
        else:  # pragma: no cover
            raise EvalError(f"unknown statement {s!r}")

    def _guard(self, fn, span):
        try:
            return fn()
        except EvalError as exc:
            if exc.span is None:
                raise EvalError(exc.detail, span) from exc
            raise
        except (QuarticaError, ValueError, ZeroDivisionError) as exc:
            raise EvalError(f"{type(exc).__name__}: {exc}", span) from exc

    def field_decl(self, s: FieldDecl) -> None:
        if self.field_declared:
            raise EvalError("only one field declaration is allowed per scenario", s.span)
        levels = []
        for gen, e in s.levels:
            levels.append((gen, format_expr(e)))
        try:
            T = make_tower(levels)
        except QuarticaError as exc:
            raise EvalError(f"{type(exc).__name__}: {exc}", s.span) from exc
        # earlier bindings live in Q and lift into any tower
        self.env = {k: _atlas.lift_value(v, T) if not isinstance(v, FieldElement) else T.lift(v) for k, v in self.env.items()}
        self.tower = T
        self.field_declared = True
        self.env[s.name] = T

    def object_decl(self, s: ObjectDecl):
        v = self.expr(s.value)
        kind = s.kind
        if kind in ("lines", "points", "conics"):
            if not isinstance(v, list):
                raise EvalError(f"{kind} needs a list")
            return [self.coerce(kind[:-1], x, s.name) for x in v]
        return self.coerce(kind, v, s.name)

    def coerce(self, kind: str, v, name: str | None = None):
        T = self.tower
        if kind == "point":
            if isinstance(v, ProjPoint):
                return v
            if isinstance(v, list) and len(v) == 3:
                return ProjPoint([self.scalar(c) for c in v], T)
        elif kind == "line":
            if isinstance(v, ProjLine):
                return v
            if isinstance(v, list) and len(v) == 3:
                return ProjLine([self.scalar(c) for c in v], T)
            if isinstance(v, MultiPoly) and v.degree() == 1 and v.is_homogeneous():
                return ProjLine.from_form(v)
        elif kind == "conic":
            if isinstance(v, Conic):
                return v
            if isinstance(v, PlaneCurve):
                v = v.form
            if isinstance(v, MultiPoly) and v.degree() == 2 and v.is_homogeneous():
                return Conic.from_form(v)
        elif kind == "curve":
            if isinstance(v, PlaneCurve):
                return v
            if isinstance(v, (ProjLine, Conic)):
                return PlaneCurve(v.form(), name)
            if isinstance(v, MultiPoly) and v.is_homogeneous() and v.degree() >= 1:
                return PlaneCurve(v, name)
        raise EvalError(f"cannot use {show(v)} as a {kind}")

    def scalar(self, v) -> FieldElement:
        if isinstance(v, FieldElement):
            return self.tower.lift(v)
        if isinstance(v, int) and not isinstance(v, bool):
            return self.tower.from_rational(v)
        if isinstance(v, MultiPoly) and v.degree() <= 0:
            return v.coefficient((0, 0, 0))
        raise EvalError(f"expected a field element, got {show(v)}")

    def assertion(self, s: AssertStmt) -> AssertOutcome:
        text = format_statement(s)
        try:
            left = self.expr(s.left)
            if s.relop is None:
                if not isinstance(left, bool):
                    raise EvalError("a bare assertion needs a boolean value", s.span)
                return AssertOutcome(s.span, text, "pass" if left else "fail", show(left), "true")
            right = self.expr(s.right)
            same = values_equal(left, right)
            ok = same if s.relop == "==" else not same
            expected = show(right) if s.relop == "==" else f"not {show(right)}"
            return AssertOutcome(s.span, text, "pass" if ok else "fail", show(left), expected)
        except FieldTooSmall as exc:
            return AssertOutcome(s.span, text, "inconclusive", f"field too small: {exc}", None)
        except EvalError as exc:
            return AssertOutcome(exc.span or s.span, text, "error", exc.detail, None)
        except (QuarticaError, ValueError, ZeroDivisionError) as exc:
            return AssertOutcome(s.span, text, "error", f"{type(exc).__name__}: {exc}", None)

    # expressions
    def expr(self, e):
        if isinstance(e, Num):
            return e.value
        if isinstance(e, Str):
            return e.value
        if isinstance(e, Bool):
            return e.value
        if isinstance(e, Name):
            return self.name(e)
        if isinstance(e, Neg):
            v = self.expr(e.operand)
            return -self._arith(v)
        if isinstance(e, BinOp):
            return self.binop(e)
        if isinstance(e, PointLit):
            coords = [self.scalar(self.expr(c)) for c in e.coords]
            try:
                return ProjPoint(coords, self.tower)
            except (QuarticaError, ValueError) as exc:
                raise EvalError(str(exc), e.span) from exc
        if isinstance(e, ListLit):
            return [self.expr(x) for x in e.items]
        if isinstance(e, Call):
            return self.call(e)
        raise EvalError(f"unsupported expression {e!r}")

    def name(self, e: Name):
        ident = e.ident
        if ident in self.env:
            return self.env[ident]
        if ident in ("x", "y", "z"):
            return MultiPoly.gens(self.tower)["xyz".index(ident)]
        if ident in self.tower.names:
            return self.tower.gen(ident)
        raise EvalError(f"undeclared identifier {ident!r}", e.span)

    def _arith(self, v):
        if isinstance(v, PlaneCurve):
            return v.form
        if isinstance(v, (ProjLine, Conic)):
            return v.form()
        if isinstance(v, (int, FieldElement, MultiPoly)) and not isinstance(v, bool):
            return v
        raise EvalError(f"no arithmetic on {show(v)}")

    def binop(self, e: BinOp):
        a = self._arith(self.expr(e.left))
        if e.op == "^":
            n = self.expr(e.right)
            if not isinstance(n, int) or (n < 0 and isinstance(a, MultiPoly)):
                raise EvalError("exponent must be an integer", e.right.span)
            if isinstance(a, int):
                a = self.tower.from_rational(a)
            return a**n
        b = self._arith(self.expr(e.right))
        if isinstance(a, int) and isinstance(b, int):
            a = self.tower.from_rational(a)
        try:
            if e.op == "+":
                return a + b if not isinstance(b, MultiPoly) or isinstance(a, MultiPoly) else b + a
            if e.op == "-":
                return a - b if not isinstance(b, MultiPoly) or isinstance(a, MultiPoly) else -(b - a)
            if e.op == "*":
                return a * b if not isinstance(b, MultiPoly) or isinstance(a, MultiPoly) else b * a
            if e.op == "/":
                if isinstance(b, MultiPoly):
                    raise EvalError("division by a form", e.span)
                return a / b
        except QuarticaError as exc:
            if isinstance(exc, EvalError):
                raise
            raise EvalError(f"{type(exc).__name__}: {exc}", e.span) from exc
        raise EvalError(f"unknown operator {e.op}", e.span)

    def call(self, e: Call):
        fn = BUILTINS.get(e.func)
        if fn is None:
            raise EvalError(f"unknown function {e.func!r}", e.span)
        args = [self.expr(a) for a in e.args]
        try:
            return fn(self, *args)
        except TypeError as exc:
            raise EvalError(f"{e.func}: {exc}", e.span) from exc
        except FieldTooSmall:
            raise
        except EvalError as exc:
            raise EvalError(exc.detail, exc.span or e.span) from exc
        except (QuarticaError, ValueError, ZeroDivisionError) as exc:
            raise EvalError(f"{e.func}: {type(exc).__name__}: {exc}", e.span) from exc


# -- builtins ---------------------------------------------------------------------
def _lines(ev: Evaluator, v) -> list[ProjLine]:
    return [ev.coerce("line", x) for x in v]


def _points(ev: Evaluator, v) -> list[ProjPoint]:
    return [ev.coerce("point", x) for x in v]


def _form(ev: Evaluator, v) -> MultiPoly:
    return ev._arith(v) if not isinstance(v, int) else MultiPoly.const(ev.tower, v)


def _contact_target(ev: Evaluator, v):
    if isinstance(v, (ProjLine, Conic)):
        return v
    return ev.coerce("curve", v)


def b_tvector(ev, lines):
    return line_census(_lines(ev, lines)).t_vector


def b_pn(ev, lines, k):
    return line_census(_lines(ev, lines)).pn(k)


def b_dual(ev, obj):
    if isinstance(obj, list):
        return [dualize(x) for x in obj]
    return dualize(obj)


def b_meet(ev, a, b):
    return meet(ev.coerce("line", a), ev.coerce("line", b))


def b_join(ev, a, b):
    return join(ev.coerce("point", a), ev.coerce("point", b))


def b_crossratio(ev, *pts):
    return cross_ratio(*_points(ev, pts))


def b_harmonic(ev, *pts):
    if len(pts) == 1 and isinstance(pts[0], list):
        pts = pts[0]
    return is_harmonic(*_points(ev, pts))


def b_contact(ev, curve, other, p):
    return contact_order(ev.coerce("curve", curve), _contact_target(ev, other), ev.coerce("point", p)).order


def b_is_mtl(ev, curve, line):
    ok, _ = mtl_verify(ev.coerce("curve", curve), ev.coerce("line", line))
    return ok


def b_hessian(ev, curve):
    return hessian(ev.coerce("curve", curve)).form


def b_sextactic(ev, curve, p):
    return sextactic_classify(ev.coerce("curve", curve), ev.coerce("point", p)).classification


def b_biosculating(ev, curve, pts):
    return [q for q, _, _ in biosculating_conics(ev.coerce("curve", curve), _points(ev, pts))]


def b_census(ev, conics, *claimed):
    special = [p for group in claimed for p in _points(ev, group if isinstance(group, list) else [group])]
    cen = conic_census([ev.coerce("conic", q) for q in conics], special)
    led = cen.ledger
    return [led["distinct"], led["simple"], led["tacnode"], led["quadruple"]]


def b_hilbert(ev, pts, t):
    return hilbert_function(PointSet(_points(ev, pts)), t)


def b_ci_check(ev, pts, f, g):
    return verify_complete_intersection(PointSet(_points(ev, pts)), _form(ev, f), _form(ev, g), strict=False).certified


def b_containment(ev, f, g, h):
    return variety_containment(_form(ev, f), _form(ev, g), _form(ev, h)).status


def b_atlas(ev, id_):
    if not isinstance(id_, str):
        raise EvalError("atlas needs a string id")
    return _atlas.get(id_, ev.tower)


def b_len(ev, v):
    if not isinstance(v, list):
        raise EvalError("len needs a list")
    return len(v)


def b_on(ev, p, obj):
    p = ev.coerce("point", p)
    if isinstance(obj, (ProjLine, Conic, PlaneCurve)):
        return obj.contains(p)
    return not _form(ev, obj).evaluate(p.coords)


BUILTINS = {
    "tvector": b_tvector,
    "pn": b_pn,
    "dual": b_dual,
    "meet": b_meet,
    "join": b_join,
    "crossratio": b_crossratio,
    "harmonic": b_harmonic,
    "contact": b_contact,
    "is_mtl": b_is_mtl,
    "hessian": b_hessian,
    "sextactic": b_sextactic,
    "biosculating": b_biosculating,
    "census": b_census,
    "hilbert": b_hilbert,
    "ci_check": b_ci_check,
    "containment": b_containment,
    "atlas": b_atlas,
    "len": b_len,
    "on": b_on,
}


def evaluate(ast: ScenarioAst | str, tower: TowerField = QQ) -> ScenarioResult:
    """Run a scenario (AST or source text) and collect its assertion outcomes."""
    if isinstance(ast, str):
        ast = parse(ast)
    return Evaluator(tower).run(ast)


def evaluate_expression(text: str, tower: TowerField = QQ):
    from .parser import parse_expression

    return Evaluator(tower).expr(parse_expression(text))
