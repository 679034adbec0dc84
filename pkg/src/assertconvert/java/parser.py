"""Recursive-descent parser for Java expressions.

Only the expression forms that appear as assertion arguments are
supported. Anything else (anonymous class bodies, block lambdas, switch
expressions, ...) raises ``ParseError`` so the caller can report the
enclosing assertion instead of silently dropping it.
"""

from __future__ import annotations

from . import nodes as n
from .lexer import PRIMITIVE_TYPES, JavaSyntaxError, Token, TokenKind, tokenize


class ParseError(JavaSyntaxError):
    def __init__(self, message: str, start: int, end: int | None = None, expected: str = ""):
        super().__init__(message, start, end)
        self.expected = expected


_BINARY_PRECEDENCE = {
    "||": 1,
    "&&": 2,
    "|": 3,
    "^": 4,
    "&": 5,
    "==": 6,
    "!=": 6,
    "<": 7,
    ">": 7,
    "<=": 7,
    ">=": 7,
    "<<": 8,
    ">>": 8,
    ">>>": 8,
    "+": 9,
    "-": 9,
    "*": 10,
    "/": 10,
    "%": 10,
}
_INSTANCEOF_PRECEDENCE = 7

_ASSIGN_OPS = frozenset("= += -= *= /= %= &= |= ^= <<= >>= >>>=".split())
_PREFIX_OPS = frozenset("+ - ! ~ ++ --".split())
_LITERAL_KINDS = {
    TokenKind.STRING: n.StringLiteral,
    TokenKind.CHAR: n.CharLiteral,
    TokenKind.INT: n.IntegerLiteral,
    TokenKind.LONG: n.LongLiteral,
    TokenKind.DOUBLE: n.DoubleLiteral,
}


def join_tokens(tokens: list[Token]) -> str:
    """Rebuild source text from tokens, keeping a single space where the
    original had any whitespace."""
    parts = []
    prev = None
    for tok in tokens:
        if prev is not None and tok.start > prev.end:
            parts.append(" ")
        parts.append(tok.text)
        prev = tok
    return "".join(parts)


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = list(tokens)
        self.pos = 0

    # -- token helpers -------------------------------------------------

    def peek(self, offset: int = 0) -> Token | None:
        i = self.pos + offset
        return self.tokens[i] if i < len(self.tokens) else None

    def at(self, *texts: str, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok is not None and tok.kind != TokenKind.STRING and tok.kind != TokenKind.CHAR and tok.text in texts

    def at_kind(self, kind: TokenKind, offset: int = 0) -> bool:
        tok = self.peek(offset)
        return tok is not None and tok.kind == kind

    def advance(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of expression", "more input")
        self.pos += 1
        return tok

    def expect(self, text: str) -> Token:
        if text == ">" and self.at(">>", ">>>", ">=", ">>=", ">>>="):
            self._split_angle()
        if not self.at(text):
            raise self.error(f"expected {text!r}", text)
        return self.advance()

    def expect_ident(self) -> Token:
        if not self.at_kind(TokenKind.IDENTIFIER):
            raise self.error("expected identifier", "identifier")
        return self.advance()

    def error(self, message: str, expected: str = "") -> ParseError:
        tok = self.peek()
        if tok is None:
            end = self.tokens[-1].end if self.tokens else 0
            return ParseError(message, end, end, expected)
        return ParseError(f"{message}, found {tok.text!r}", tok.start, tok.end, expected)

    def _split_angle(self) -> None:
        tok = self.tokens[self.pos]
        first = Token(TokenKind.OPERATOR, ">", tok.start, tok.start + 1)
        rest = Token(TokenKind.OPERATOR, tok.text[1:], tok.start + 1, tok.end)
        self.tokens[self.pos : self.pos + 1] = [first, rest]

    def _matching_close(self, index: int) -> int | None:
        depth = 0
        for i in range(index, len(self.tokens)):
            tok = self.tokens[i]
            if tok.kind != TokenKind.PUNCTUATION:
                continue
            if tok.text in "([{":
                depth += 1
            elif tok.text in ")]}":
                depth -= 1
                if depth == 0:
                    return i
        return None

    # -- types ---------------------------------------------------------

    def parse_type(self) -> str:
        start = self.pos
        if self.at_kind(TokenKind.KEYWORD) and self.peek().text in PRIMITIVE_TYPES:
            self.advance()
        else:
            self.expect_ident()
            self._type_args_opt()
            while self.at(".") and self.at_kind(TokenKind.IDENTIFIER, 1):
                self.advance()
                self.advance()
                self._type_args_opt()
        while self.at("[") and self.at("]", offset=1):
            self.advance()
            self.advance()
        if self.at("..."):
            self.advance()
        return join_tokens(self.tokens[start : self.pos])

    def _type_args_opt(self) -> None:
        if not self.at("<"):
            return
        self.advance()
        if self.at(">"):
            self.advance()
            return
        while True:
            if self.at("?"):
                self.advance()
                if self.at("extends", "super"):
                    self.advance()
                    self.parse_type()
            else:
                self.parse_type()
            if self.at(","):
                self.advance()
                continue
            self.expect(">")
            return

    def try_type(self) -> str | None:
        save = self.pos
        saved_tokens = list(self.tokens)
        try:
            return self.parse_type()
        except ParseError:
            self.pos = save
            self.tokens = saved_tokens
            return None

    # -- expressions ---------------------------------------------------

    def parse_top(self) -> n.Expr:
        decl = self.try_declaration()
        if decl is not None:
            return decl
        expr = self.expression()
        if self.peek() is not None:
            raise self.error("unexpected trailing input", "end of expression")
        return expr

    def try_declaration(self) -> n.VariableDeclaration | None:
        save = self.pos
        saved_tokens = list(self.tokens)
        if self.at("final"):
            self.advance()
        type_name = self.try_type()
        if (
            type_name is None
            or not self.at_kind(TokenKind.IDENTIFIER)
            or not (self.peek(1) is None or self.at("=", ",", offset=1))
        ):
            self.pos = save
            self.tokens = saved_tokens
            return None
        declarators = []
        while True:
            name = self.expect_ident().text
            init = None
            if self.at("="):
                self.advance()
                init = self.array_initializer() if self.at("{") else self.expression()
            declarators.append(n.VarDeclarator(type_name, name, init))
            if self.at(","):
                self.advance()
                continue
            break
        if self.peek() is not None:
            raise self.error("unexpected trailing input", "end of declaration")
        return n.VariableDeclaration(tuple(declarators))

    def expression(self) -> n.Expr:
        lam = self.try_lambda()
        if lam is not None:
            return lam
        left = self.conditional()
        tok = self.peek()
        if tok is not None and tok.kind == TokenKind.OPERATOR and tok.text in _ASSIGN_OPS:
            if not isinstance(left, (n.Name, n.FieldAccess, n.ArrayAccess)):
                raise self.error("invalid assignment target")
            self.advance()
            return n.Assign(left, tok.text, self.expression())
        return left

    def try_lambda(self) -> n.Lambda | None:
        if self.at_kind(TokenKind.IDENTIFIER) and self.at("->", offset=1):
            param = self.advance().text
            self.advance()
            return n.Lambda((param,), self.lambda_body(), parenthesized=False)
        if not self.at("("):
            return None
        close = self._matching_close(self.pos)
        if close is None or close + 1 >= len(self.tokens) or self.tokens[close + 1].text != "->":
            return None
        inner = self.tokens[self.pos + 1 : close]
        params = []
        group: list[Token] = []
        depth = 0
        for tok in inner:
            if tok.text in ("<", "(", "["):
                depth += 1
            elif tok.text in (">", ")", "]"):
                depth -= 1
            if tok.text == "," and depth == 0:
                params.append(join_tokens(group))
                group = []
            else:
                group.append(tok)
        if group:
            params.append(join_tokens(group))
        self.pos = close + 2
        return n.Lambda(tuple(params), self.lambda_body())

    def lambda_body(self) -> n.Expr:
        if self.at("{"):
            raise self.error("block-bodied lambdas are not supported", "expression body")
        return self.expression()

    def conditional(self) -> n.Expr:
        cond = self.binary(1)
        if not self.at("?"):
            return cond
        self.advance()
        then = self.expression()
        self.expect(":")
        otherwise = self.try_lambda() or self.conditional()
        return n.Conditional(cond, then, otherwise)

    def binary(self, min_prec: int) -> n.Expr:
        left = self.unary()
        while True:
            tok = self.peek()
            if tok is None:
                return left
            if tok.kind == TokenKind.KEYWORD and tok.text == "instanceof":
                if _INSTANCEOF_PRECEDENCE < min_prec:
                    return left
                self.advance()
                if self.at("final"):
                    raise self.error("instanceof patterns are not supported")
                left = n.InstanceOf(left, self.parse_type())
                continue
            if tok.kind != TokenKind.OPERATOR or tok.text not in _BINARY_PRECEDENCE:
                return left
            prec = _BINARY_PRECEDENCE[tok.text]
            if prec < min_prec:
                return left
            self.advance()
            right = self.binary(prec + 1)
            left = n.Binary(left, tok.text, right)

    def unary(self) -> n.Expr:
        tok = self.peek()
        if tok is not None and tok.kind == TokenKind.OPERATOR and tok.text in _PREFIX_OPS:
            self.advance()
            return n.Unary(tok.text, self.unary(), prefix=True)
        if self.at("("):
            cast = self.try_cast()
            if cast is not None:
                return cast
        return self.postfix(self.primary())

    def try_cast(self) -> n.Cast | None:
        save = self.pos
        saved_tokens = list(self.tokens)
        self.advance()
        type_name = self.try_type()
        if type_name is None or not self.at(")"):
            self.pos = save
            self.tokens = saved_tokens
            return None
        self.advance()
        nxt = self.peek()
        base = type_name.split("[")[0].strip()
        if nxt is None:
            ok = False
        elif base in PRIMITIVE_TYPES:
            ok = nxt.kind != TokenKind.OPERATOR or nxt.text in _PREFIX_OPS
            ok = ok and nxt.text not in (")", ",", ";", "]", "}", ".", "[", "?", ":")
        else:
            ok = (
                nxt.kind in (TokenKind.IDENTIFIER, *_LITERAL_KINDS)
                or (nxt.kind == TokenKind.KEYWORD and nxt.text in ("this", "super", "new", "true", "false", "null"))
                or nxt.text in ("(", "!", "~")
            )
        if not ok:
            self.pos = save
            self.tokens = saved_tokens
            return None
        lam = self.try_lambda()
        return n.Cast(type_name, lam if lam is not None else self.unary())

    def arguments(self) -> tuple[n.Expr, ...]:
        self.expect("(")
        args = []
        if not self.at(")"):
            while True:
                args.append(self.expression())
                if self.at(","):
                    self.advance()
                    continue
                break
        self.expect(")")
        return tuple(args)

    def postfix(self, expr: n.Expr) -> n.Expr:
        while True:
            if self.at("."):
                self.advance()
                if self.at("<"):
                    start = self.pos
                    self._type_args_opt()
                    targs = join_tokens(self.tokens[start : self.pos])
                    name = self.expect_ident().text
                    expr = n.MethodCall(expr, name, self.arguments(), type_args=targs)
                elif self.at("class"):
                    self.advance()
                    expr = n.ClassExpr(self._dotted(expr))
                elif self.at("this"):
                    self.advance()
                    expr = n.ThisExpr(self._dotted(expr))
                elif self.at("super"):
                    self.advance()
                    expr = n.SuperExpr(self._dotted(expr))
                elif self.at("new"):
                    raise self.error("qualified instance creation is not supported")
                else:
                    name = self.expect_ident().text
                    if self.at("("):
                        expr = n.MethodCall(expr, name, self.arguments())
                    else:
                        expr = n.FieldAccess(expr, name)
            elif self.at("["):
                self.advance()
                index = self.expression()
                self.expect("]")
                expr = n.ArrayAccess(expr, index)
            elif self.at("::"):
                self.advance()
                if self.at("new"):
                    self.advance()
                    expr = n.MethodReference(expr, "new")
                else:
                    expr = n.MethodReference(expr, self.expect_ident().text)
            elif self.at("++", "--"):
                expr = n.Unary(self.advance().text, expr, prefix=False)
            else:
                return expr

    def _dotted(self, expr: n.Expr) -> str:
        if isinstance(expr, n.Name):
            return expr.identifier
        if isinstance(expr, n.FieldAccess):
            return f"{self._dotted(expr.scope)}.{expr.field_name}"
        if isinstance(expr, n.TypeExpr):
            return expr.type_name
        raise self.error("expected a type name")

    def primary(self) -> n.Expr:
        tok = self.peek()
        if tok is None:
            raise self.error("unexpected end of expression", "expression")
        if tok.kind in _LITERAL_KINDS:
            self.advance()
            return _LITERAL_KINDS[tok.kind](tok.text)
        if tok.kind == TokenKind.KEYWORD:
            if tok.text in ("true", "false"):
                self.advance()
                return n.BooleanLiteral(tok.text == "true")
            if tok.text == "null":
                self.advance()
                return n.NullLiteral()
            if tok.text == "this":
                self.advance()
                if self.at("("):
                    return n.MethodCall(None, "this", self.arguments())
                return n.ThisExpr()
            if tok.text == "super":
                self.advance()
                return n.SuperExpr()
            if tok.text == "new":
                return self.creation()
            if tok.text in PRIMITIVE_TYPES:
                return self.type_primary()
            raise self.error(f"unsupported construct {tok.text!r}", "expression")
        if tok.kind == TokenKind.IDENTIFIER:
            if self.at("[", offset=1) and self.at("]", offset=2):
                return self.type_primary()
            if self.at("<", offset=1):
                typed = self._try_generic_type_primary()
                if typed is not None:
                    return typed
            self.advance()
            if self.at("("):
                return n.MethodCall(None, tok.text, self.arguments())
            return n.Name(tok.text)
        if tok.text == "(":
            self.advance()
            if self.at(")"):
                self.advance()
                return n.Enclosed(None)
            inner = self.expression()
            self.expect(")")
            return n.Enclosed(inner)
        if tok.text == "{":
            return self.array_initializer()
        raise self.error(f"unexpected token {tok.text!r}", "expression")

    def type_primary(self) -> n.Expr:
        type_name = self.parse_type()
        if self.at(".") and self.at("class", offset=1):
            self.advance()
            self.advance()
            return n.ClassExpr(type_name)
        if self.at("::") or self.peek() is None or self.at(")", ","):
            return n.TypeExpr(type_name)
        raise self.error("expected '.class' or '::' after type", ".class")

    def _try_generic_type_primary(self) -> n.Expr | None:
        save = self.pos
        saved_tokens = list(self.tokens)
        type_name = self.try_type()
        if type_name is not None and self.at("::"):
            return n.TypeExpr(type_name)
        self.pos = save
        self.tokens = saved_tokens
        return None

    def creation(self) -> n.Expr:
        self.expect("new")
        start = self.pos
        if self.at_kind(TokenKind.KEYWORD) and self.peek().text in PRIMITIVE_TYPES:
            self.advance()
        else:
            self.expect_ident()
            self._type_args_opt()
            while self.at(".") and self.at_kind(TokenKind.IDENTIFIER, 1):
                self.advance()
                self.advance()
                self._type_args_opt()
        type_name = join_tokens(self.tokens[start : self.pos])
        if self.at("["):
            dims: list[n.Expr | None] = []
            while self.at("["):
                self.advance()
                if self.at("]"):
                    self.advance()
                    dims.append(None)
                else:
                    dims.append(self.expression())
                    self.expect("]")
            init = self.array_initializer() if self.at("{") else None
            return n.ArrayCreation(type_name, tuple(dims), init)
        args = self.arguments()
        if self.at("{"):
            raise self.error("anonymous class bodies are not supported")
        return n.ObjectCreation(type_name, args)

    def array_initializer(self) -> n.ArrayInitializer:
        self.expect("{")
        values = []
        while not self.at("}"):
            values.append(self.array_initializer() if self.at("{") else self.expression())
            if self.at(","):
                self.advance()
            elif not self.at("}"):
                raise self.error("expected ',' or '}'", "}")
        self.expect("}")
        return n.ArrayInitializer(tuple(values))


def parse_expression(tokens: list[Token]) -> n.Expr:
    """Parse a token sequence holding exactly one expression.

    A trailing ``;`` is tolerated. Local variable declarations
    (``Type name = init``) are accepted as a statement-level expression.
    """
    tokens = list(tokens)
    if tokens and tokens[-1].kind == TokenKind.PUNCTUATION and tokens[-1].text == ";":
        tokens.pop()
    if not tokens:
        raise ParseError("empty expression", 0, 0, "expression")
    return _Parser(tokens).parse_top()


def parse_java(text: str) -> n.Expr:
    return parse_expression(tokenize(text))
