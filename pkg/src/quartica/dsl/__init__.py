"""Scenario language: declarations of fields and geometric objects plus assertions."""

from .evaluator import AssertOutcome, EvalError, Evaluator, ScenarioResult, evaluate, evaluate_expression
from .lexer import LexError, Span, Token, tokenize
from .parser import ParseError, ScenarioAst, format_expr, format_scenario, parse, parse_expression

__all__ = [
    "AssertOutcome",
    "EvalError",
    "Evaluator",
    "LexError",
    "ParseError",
    "ScenarioAst",
    "ScenarioResult",
    "Span",
    "Token",
    "evaluate",
    "evaluate_expression",
    "format_expr",
    "format_scenario",
    "parse",
    "parse_expression",
    "tokenize",
]
