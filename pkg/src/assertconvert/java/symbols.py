"""Single-file symbol table: declared variable types and the class under test."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import PurePath

from .lexer import PRIMITIVE_TYPES, Token, TokenKind
from .parser import ParseError, _Parser
from .scanner import tokenize_lenient

UNKNOWN = "unknown"

NUMERIC_TYPES = frozenset(
    {
        "byte", "short", "int", "long", "float", "double",
        "Byte", "Short", "Integer", "Long", "Float", "Double",
        "BigDecimal", "BigInteger", "Number",
    }
)

# tokens that, placed right before a type, mean it is not a declaration
_NOT_DECL_PREFIX = frozenset(
    {".", "::", "new", "throws", "extends", "implements", "class", "interface",
     "enum", "import", "package", "@", "instanceof"}
)
_DECL_FOLLOW = frozenset({"=", ";", ",", ")", ":", "["})


@dataclass(frozen=True)
class Declaration:
    offset: int
    name: str
    type: str


@dataclass(frozen=True)
class SymbolTable:
    declarations: tuple[Declaration, ...] = ()
    class_under_test: str = UNKNOWN
    entries: dict[str, str] = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if not self.entries:
            table = {}
            for decl in self.declarations:
                table.setdefault(decl.name, decl.type)
            object.__setattr__(self, "entries", table)

    def type_of(self, name: str, at: int | None = None) -> str:
        """Declared type of ``name``; the nearest declaration before ``at``
        wins when a position is given."""
        if at is not None:
            best = None
            for decl in self.declarations:
                if decl.name == name and decl.offset <= at:
                    best = decl
            if best is not None:
                return best.type
        return self.entries.get(name, UNKNOWN)

    def is_class_under_test(self, type_name: str) -> bool:
        if self.class_under_test == UNKNOWN or type_name == UNKNOWN:
            return False
        return base_type_name(type_name) == self.class_under_test


EMPTY = SymbolTable()


def erase_generics(type_text: str) -> str:
    out = []
    depth = 0
    for ch in type_text:
        if ch == "<":
            depth += 1
        elif ch == ">":
            depth -= 1
        elif depth == 0 and not ch.isspace():
            out.append(ch)
    return "".join(out).replace("...", "[]")


def base_type_name(type_name: str) -> str:
    """``java.util.List<String>`` -> ``List``; array brackets are kept."""
    return erase_generics(type_name).split(".")[-1]


def is_numeric_type(type_name: str) -> bool:
    return base_type_name(type_name) in NUMERIC_TYPES


def class_under_test_for(test_class: str) -> str:
    name = test_class
    for suffix in ("Tests", "Test"):
        if name.endswith(suffix):
            name = name[: -len(suffix)]
            break
    else:
        m = re.match(r"Tests?(?=[A-Z_]|$)", name)
        if m:
            name = name[m.end():]
    name = name.strip("_")
    return name if name and name != test_class else UNKNOWN


def _test_class_name(tokens: list[Token]) -> str | None:
    for i, tok in enumerate(tokens[:-1]):
        if tok.kind == TokenKind.KEYWORD and tok.text == "class":
            nxt = tokens[i + 1]
            if nxt.kind == TokenKind.IDENTIFIER:
                return nxt.text
    return None


def build_symbol_table(source: str, filename: str | None = None) -> SymbolTable:
    tokens = tokenize_lenient(source)
    decls = []
    parser = _Parser(tokens)
    for i, tok in enumerate(tokens):
        starts_type = tok.kind == TokenKind.IDENTIFIER or (
            tok.kind == TokenKind.KEYWORD and tok.text in PRIMITIVE_TYPES and tok.text != "void"
        )
        if not starts_type:
            continue
        if i > 0 and tokens[i - 1].text in _NOT_DECL_PREFIX and tokens[i - 1].kind != TokenKind.STRING:
            continue
        parser.pos = i
        parser.tokens = tokens
        try:
            type_text = parser.parse_type()
        except ParseError:
            continue
        j = parser.pos
        # parse_type may split '>>' in place; keep our index consistent
        tokens = parser.tokens
        if j >= len(tokens) or tokens[j].kind != TokenKind.IDENTIFIER:
            continue
        if j + 1 < len(tokens) and tokens[j + 1].text not in _DECL_FOLLOW:
            continue
        if j + 1 >= len(tokens):
            continue
        decls.append(Declaration(tokens[j].start, tokens[j].text, erase_generics(type_text)))

    test_class = None
    if filename:
        test_class = PurePath(filename).stem
    if not test_class or class_under_test_for(test_class) == UNKNOWN:
        test_class = _test_class_name(tokens) or test_class
    cut = class_under_test_for(test_class) if test_class else UNKNOWN
    return SymbolTable(tuple(decls), cut)
