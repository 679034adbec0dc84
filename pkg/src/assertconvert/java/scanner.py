"""Locate assertion call statements in Java source."""

from __future__ import annotations

from dataclasses import dataclass, field

from .lexer import JavaSyntaxError, Token, TokenKind, tokenize

ASSERTION_NAMES = frozenset(
    {
        "assertTrue",
        "assertFalse",
        "assertNull",
        "assertNotNull",
        "assertEquals",
        "assertNotEquals",
        "assertArrayEquals",
        "assertSame",
        "assertNotSame",
        "assertThat",
    }
)


@dataclass(frozen=True)
class Span:
    start: int
    end: int


@dataclass(frozen=True)
class ScannedAssertion:
    span: Span
    text: str
    line: int
    method: str
    # the call expression, qualifier included, without the trailing ';'
    tokens: tuple[Token, ...] = field(repr=False, compare=False, default=())


def tokenize_lenient(source: str) -> list[Token]:
    """Tokenize, stopping quietly at the first lexical error."""
    try:
        return tokenize(source)
    except JavaSyntaxError as exc:
        return tokenize(source[: exc.start]) if exc.start > 0 else []


def _is_declaration(tokens: list[Token], i: int) -> bool:
    # `void assertFoo(` or `Type assertFoo(` declares a helper rather than calling one
    if i == 0:
        return False
    prev = tokens[i - 1]
    return prev.kind == TokenKind.IDENTIFIER or (prev.kind == TokenKind.KEYWORD and prev.text == "void")


def _matching_paren(tokens: list[Token], open_index: int) -> int | None:
    depth = 0
    for j in range(open_index, len(tokens)):
        tok = tokens[j]
        if tok.kind != TokenKind.PUNCTUATION:
            continue
        if tok.text == "(":
            depth += 1
        elif tok.text == ")":
            depth -= 1
            if depth == 0:
                return j
    return None


def scan_assertions(source: str) -> list[ScannedAssertion]:
    tokens = tokenize_lenient(source)
    found = []
    for i, tok in enumerate(tokens):
        if tok.kind != TokenKind.IDENTIFIER or tok.text not in ASSERTION_NAMES:
            continue
        if i + 1 >= len(tokens) or not tokens[i + 1].is_op("("):
            continue
        if _is_declaration(tokens, i):
            continue
        first = i
        while (
            first >= 2
            and tokens[first - 1].is_op(".")
            and tokens[first - 2].kind == TokenKind.IDENTIFIER
        ):
            first -= 2
        close = _matching_paren(tokens, i + 1)
        last = close if close is not None else len(tokens) - 1
        call_tokens = tuple(tokens[first : last + 1])
        end = tokens[last].end
        if close is not None and close + 1 < len(tokens) and tokens[close + 1].is_op(";"):
            end = tokens[close + 1].end
        start = tokens[first].start
        found.append(
            ScannedAssertion(
                span=Span(start, end),
                text=source[start:end],
                line=source.count("\n", 0, start) + 1,
                method=tok.text,
                tokens=call_tokens,
            )
        )
    return found
