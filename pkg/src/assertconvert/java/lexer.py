"""Tokenizer for the slice of Java that shows up in unit tests."""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass


class TokenKind(enum.Enum):
    IDENTIFIER = "identifier"
    KEYWORD = "keyword"
    STRING = "string-literal"
    CHAR = "char-literal"
    INT = "int-literal"
    LONG = "long-literal"
    DOUBLE = "double-literal"
    OPERATOR = "operator"
    PUNCTUATION = "punctuation"


KEYWORDS = frozenset(
    """
    abstract assert boolean break byte case catch char class const continue
    default do double else enum extends final finally float for goto if
    implements import instanceof int interface long native new package private
    protected public return short static strictfp super switch synchronized
    this throw throws transient try void volatile while true false null var
    """.split()
)

PRIMITIVE_TYPES = frozenset(
    "boolean byte char short int long float double void".split()
)

# longest first so the alternation is maximal-munch
_OPERATORS = sorted(
    """
    >>>= <<= >>= >>> ... -> :: ++ -- && || == != <= >= += -= *= /= %= &= |= ^=
    << >> = > < ! ~ ? : + - * / & | ^ %
    """.split(),
    key=len,
    reverse=True,
)
_PUNCTUATION = "(){}[];,.@"

_NUMBER_RE = re.compile(
    r"""
    0[xX][0-9a-fA-F_]*\.?[0-9a-fA-F_]*(?:[pP][+-]?[0-9_]+)?[fFdDlL]?
  | 0[bB][01_]+[lL]?
  | (?:[0-9][0-9_]*\.?[0-9_]*|\.[0-9][0-9_]*)(?:[eE][+-]?[0-9_]+)?[fFdDlL]?
    """,
    re.VERBOSE,
)
_IDENT_RE = re.compile(r"[^\W\d]\w*|\$[\w$]*", re.UNICODE)

_ESCAPES = {
    "b": "\b",
    "t": "\t",
    "n": "\n",
    "f": "\f",
    "r": "\r",
    "s": " ",
    '"': '"',
    "'": "'",
    "\\": "\\",
}


class JavaSyntaxError(Exception):
    """Base class for lexing and parsing failures; carries a source span."""

    def __init__(self, message: str, start: int, end: int | None = None):
        super().__init__(message)
        self.start = start
        self.end = start + 1 if end is None else end


class UnterminatedString(JavaSyntaxError):
    pass


class UnterminatedComment(JavaSyntaxError):
    pass


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    text: str
    start: int
    end: int

    @property
    def value(self) -> str:
        """Decoded value for string/char literals, the raw text otherwise."""
        if self.kind in (TokenKind.STRING, TokenKind.CHAR):
            return unescape(self.text[1:-1])
        return self.text

    def is_op(self, *texts: str) -> bool:
        return self.kind in (TokenKind.OPERATOR, TokenKind.PUNCTUATION) and self.text in texts


def unescape(body: str) -> str:
    out = []
    i = 0
    while i < len(body):
        ch = body[i]
        if ch != "\\" or i + 1 >= len(body):
            out.append(ch)
            i += 1
            continue
        nxt = body[i + 1]
        if nxt in _ESCAPES:
            out.append(_ESCAPES[nxt])
            i += 2
        elif nxt == "u":
            j = i + 1
            while j < len(body) and body[j] == "u":
                j += 1
            digits = body[j : j + 4]
            try:
                out.append(chr(int(digits, 16)))
                i = j + 4
            except ValueError:
                out.append(body[i : j + 4])
                i = j + 4
        elif nxt in "01234567":
            m = re.match(r"[0-3][0-7]{0,2}|[0-7]{1,2}", body[i + 1 :])
            out.append(chr(int(m.group(0), 8)))
            i += 1 + len(m.group(0))
        else:
            out.append(nxt)
            i += 2
    return "".join(out)


def _number_kind(text: str) -> TokenKind:
    lower = text.lower()
    if lower.endswith("l"):
        return TokenKind.LONG
    if lower.startswith("0x"):
        if "." in lower or "p" in lower:
            return TokenKind.DOUBLE
        return TokenKind.INT
    if lower.startswith("0b"):
        return TokenKind.INT
    if "." in lower or "e" in lower or lower[-1] in "fd":
        return TokenKind.DOUBLE
    return TokenKind.INT


def _scan_quoted(source: str, pos: int, quote: str) -> int:
    """Return the index just past the closing quote starting at ``pos``."""
    i = pos + 1
    n = len(source)
    while i < n:
        ch = source[i]
        if ch == "\\":
            i += 2
            continue
        if ch == quote:
            return i + 1
        if ch == "\n":
            break
        i += 1
    kind = "string" if quote == '"' else "character"
    raise UnterminatedString(f"unterminated {kind} literal", pos, min(i, n))


def tokenize(source: str) -> list[Token]:
    tokens: list[Token] = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if source.startswith("//", i):
            nl = source.find("\n", i)
            i = n if nl < 0 else nl + 1
            continue
        if source.startswith("/*", i):
            close = source.find("*/", i + 2)
            if close < 0:
                raise UnterminatedComment("unterminated block comment", i, n)
            i = close + 2
            continue
        if source.startswith('"""', i):
            close = source.find('"""', i + 3)
            while close > 0 and source[close - 1] == "\\":
                close = source.find('"""', close + 1)
            if close < 0:
                raise UnterminatedString("unterminated text block", i, n)
            tokens.append(Token(TokenKind.STRING, source[i : close + 3], i, close + 3))
            i = close + 3
            continue
        if ch == '"' or ch == "'":
            end = _scan_quoted(source, i, ch)
            kind = TokenKind.STRING if ch == '"' else TokenKind.CHAR
            tokens.append(Token(kind, source[i:end], i, end))
            i = end
            continue
        if ch.isdigit() or (ch == "." and i + 1 < n and source[i + 1].isdigit()):
            m = _NUMBER_RE.match(source, i)
            text = m.group(0)
            tokens.append(Token(_number_kind(text), text, i, m.end()))
            i = m.end()
            continue
        m = _IDENT_RE.match(source, i)
        if m:
            text = m.group(0)
            kind = TokenKind.KEYWORD if text in KEYWORDS else TokenKind.IDENTIFIER
            tokens.append(Token(kind, text, i, m.end()))
            i = m.end()
            continue
        if ch in _PUNCTUATION and not source.startswith("...", i):
            tokens.append(Token(TokenKind.PUNCTUATION, ch, i, i + 1))
            i += 1
            continue
        for op in _OPERATORS:
            if source.startswith(op, i):
                tokens.append(Token(TokenKind.OPERATOR, op, i, i + len(op)))
                i += len(op)
                break
        else:
            raise JavaSyntaxError(f"unexpected character {ch!r}", i)
    return tokens
