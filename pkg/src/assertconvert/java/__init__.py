"""Java source handling: tokens, expression AST, assertion scanning, symbols."""

from .lexer import JavaSyntaxError, Token, TokenKind, UnterminatedComment, UnterminatedString, tokenize
from .parser import ParseError, parse_expression, parse_java
from .scanner import ASSERTION_NAMES, ScannedAssertion, Span, scan_assertions
from .symbols import UNKNOWN, SymbolTable, build_symbol_table

__all__ = [
    "ASSERTION_NAMES",
    "JavaSyntaxError",
    "ParseError",
    "ScannedAssertion",
    "Span",
    "SymbolTable",
    "Token",
    "TokenKind",
    "UNKNOWN",
    "UnterminatedComment",
    "UnterminatedString",
    "build_symbol_table",
    "parse_expression",
    "parse_java",
    "scan_assertions",
    "tokenize",
]
