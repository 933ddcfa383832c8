"""Tokenizer for ``.qsc`` scenario files."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import QuarticaError

KEYWORDS = {
    "field", "let", "curve", "line", "conic", "point", "lines", "points", "conics",
    "assert", "print", "true", "false",
}
PUNCT2 = ("==", "!=")
PUNCT1 = "=()[],:+-*/^"


@dataclass(frozen=True)
class Span:
    line: int
    column: int
    end_line: int
    end_column: int

    def __str__(self) -> str:
        return f"{self.line}:{self.column}"


@dataclass(frozen=True)
class Token:
    kind: str  # ident | integer | punct | keyword | string | eof
    lexeme: str
    span: Span


class LexError(QuarticaError):
    def __init__(self, message: str, span: Span):
        super().__init__(f"{span}: {message}")
        self.span = span


def tokenize(text: str) -> list[Token]:
    """Split scenario text into tokens; columns are 1-based."""
    tokens: list[Token] = []
    line, col = 1, 1
    i, n = 0, len(text)

    def span_to(length: int) -> Span:
        return Span(line, col, line, col + length)

    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "#":
            while i < n and text[i] != "\n":
                i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(Token("integer", text[i:j], span_to(j - i)))
            col += j - i
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            kind = "keyword" if word in KEYWORDS else "ident"
            tokens.append(Token(kind, word, span_to(j - i)))
            col += j - i
            i = j
            continue
        if ch == '"':
            j = i + 1
            while j < n and text[j] != '"' and text[j] != "\n":
                j += 1
            if j >= n or text[j] != '"':
                raise LexError("unterminated string", span_to(1))
            tokens.append(Token("string", text[i + 1 : j], span_to(j + 1 - i)))
            col += j + 1 - i
            i = j + 1
            continue
        two = text[i : i + 2]
        if two in PUNCT2:
            tokens.append(Token("punct", two, span_to(2)))
            i += 2
            col += 2
            continue
        if ch in PUNCT1:
            tokens.append(Token("punct", ch, span_to(1)))
            i += 1
            col += 1
            continue
        raise LexError(f"unexpected character {ch!r}", span_to(1))
    tokens.append(Token("eof", "", Span(line, col, line, col)))
    return tokens
