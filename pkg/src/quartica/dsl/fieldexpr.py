"""Evaluation of pure field expressions (no polynomial variables, no calls)."""

from __future__ import annotations

from ..errors import MalformedSpec
from .parser import BinOp, Name, Neg, Num, parse_expression


def evaluate_field_expression(text_or_node, tower, env=None):
    """Evaluate ``"(1+i)*r2/2"``-style text in ``tower``.

    Names resolve to generators of the tower, or to entries of ``env``.
    """
    node = parse_expression(text_or_node) if isinstance(text_or_node, str) else text_or_node
    env = env or {}

    def ev(e):
        if isinstance(e, Num):
            return tower.from_rational(e.value)
        if isinstance(e, Name):
            if e.ident in env:
                return tower.lift(env[e.ident])
            if e.ident in tower.names:
                return tower.gen(e.ident)
            raise MalformedSpec(f"unknown name {e.ident!r} in field expression")
        if isinstance(e, Neg):
            return -ev(e.operand)
        if isinstance(e, BinOp):
            if e.op == "^":
                if not isinstance(e.right, (Num, Neg)):
                    raise MalformedSpec("exponent must be an integer literal")
                exp = e.right.value if isinstance(e.right, Num) else -e.right.operand.value
                return ev(e.left) ** exp
            a, b = ev(e.left), ev(e.right)
            if e.op == "+":
                return a + b
            if e.op == "-":
                return a - b
            if e.op == "*":
                return a * b
            if e.op == "/":
                return a / b
        raise MalformedSpec(f"unsupported construct in field expression: {e!r}")

    return ev(node)


def evaluate_poly_expression(text_or_node, tower, env=None):
    """Evaluate an expression in x, y, z and the tower generators to a MultiPoly or FieldElement."""
    from ..poly import MultiPoly

    node = parse_expression(text_or_node) if isinstance(text_or_node, str) else text_or_node
    env = env or {}
    gens = dict(zip(("x", "y", "z"), MultiPoly.gens(tower)))

    def ev(e):
        if isinstance(e, Num):
            return tower.from_rational(e.value)
        if isinstance(e, Name):
            if e.ident in gens:
                return gens[e.ident]
            if e.ident in env:
                v = env[e.ident]
                return v.lift(tower) if isinstance(v, MultiPoly) else tower.lift(v)
            if e.ident in tower.names:
                return tower.gen(e.ident)
            raise MalformedSpec(f"unknown name {e.ident!r} in polynomial expression")
        if isinstance(e, Neg):
            return -ev(e.operand)
        if isinstance(e, BinOp):
            if e.op == "^":
                if not isinstance(e.right, Num):
                    raise MalformedSpec("exponent must be a non-negative integer literal")
                return ev(e.left) ** e.right.value
            a, b = ev(e.left), ev(e.right)
            if e.op == "+":
                return a + b
            if e.op == "-":
                return a - b
            if e.op == "*":
                return _mul(a, b)
            if e.op == "/":
                if isinstance(b, MultiPoly):
                    raise MalformedSpec("division by a polynomial")
                return a / b
        raise MalformedSpec(f"unsupported construct in polynomial expression: {e!r}")

    def _mul(a, b):
        if isinstance(b, MultiPoly) and not isinstance(a, MultiPoly):
            return b * a
        return a * b

    return ev(node)
