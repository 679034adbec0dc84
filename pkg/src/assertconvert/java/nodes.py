"""AST for the supported Java expression subset.

Every node is a frozen dataclass. Literals keep their exact source text so
``to_source`` can reproduce the expression without loss.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Union

from .lexer import unescape


@dataclass(frozen=True)
class ArrayAccess:
    name: "Expr"
    index: "Expr"


@dataclass(frozen=True)
class ArrayInitializer:
    values: tuple["Expr", ...] = ()


@dataclass(frozen=True)
class ArrayCreation:
    elem_type: str
    # one entry per bracket pair; None for an empty ``[]``
    dims: tuple[Optional["Expr"], ...]
    initializer: Optional[ArrayInitializer] = None


@dataclass(frozen=True)
class Assign:
    target: "Expr"
    op: str
    value: "Expr"


@dataclass(frozen=True)
class Binary:
    left: "Expr"
    op: str
    right: "Expr"


@dataclass(frozen=True)
class BooleanLiteral:
    value: bool


@dataclass(frozen=True)
class Cast:
    type: str
    inner: "Expr"


@dataclass(frozen=True)
class CharLiteral:
    text: str

    @property
    def value(self) -> str:
        return unescape(self.text[1:-1])


@dataclass(frozen=True)
class ClassExpr:
    type_name: str


@dataclass(frozen=True)
class Conditional:
    cond: "Expr"
    then: "Expr"
    otherwise: "Expr"


@dataclass(frozen=True)
class DoubleLiteral:
    text: str


@dataclass(frozen=True)
class Enclosed:
    inner: Optional["Expr"] = None


@dataclass(frozen=True)
class FieldAccess:
    scope: "Expr"
    field_name: str


@dataclass(frozen=True)
class InstanceOf:
    expr: "Expr"
    type_name: str


@dataclass(frozen=True)
class IntegerLiteral:
    text: str


@dataclass(frozen=True)
class Lambda:
    # parameter source texts, e.g. ("a", "b") or ("int a",)
    params: tuple[str, ...]
    body: "Expr"
    parenthesized: bool = True


@dataclass(frozen=True)
class LongLiteral:
    text: str


@dataclass(frozen=True)
class MethodCall:
    scope: Optional["Expr"]
    name: str
    args: tuple["Expr", ...] = ()
    type_args: Optional[str] = None


@dataclass(frozen=True)
class MethodReference:
    scope: "Expr"
    identifier: str


@dataclass(frozen=True)
class Name:
    identifier: str


@dataclass(frozen=True)
class NullLiteral:
    pass


@dataclass(frozen=True)
class ObjectCreation:
    type_name: str
    args: tuple["Expr", ...] = ()


@dataclass(frozen=True)
class StringLiteral:
    text: str

    @property
    def value(self) -> str:
        if self.text.startswith('"""'):
            return unescape(self.text[3:-3]).lstrip("\n")
        return unescape(self.text[1:-1])


@dataclass(frozen=True)
class SuperExpr:
    class_scope: Optional[str] = None


@dataclass(frozen=True)
class ThisExpr:
    class_scope: Optional[str] = None


@dataclass(frozen=True)
class TypeExpr:
    type_name: str


@dataclass(frozen=True)
class Unary:
    op: str
    operand: "Expr"
    prefix: bool = True


@dataclass(frozen=True)
class VarDeclarator:
    type: str
    name: str
    initializer: Optional["Expr"] = None


@dataclass(frozen=True)
class VariableDeclaration:
    vars: tuple[VarDeclarator, ...] = field(default=())


Expr = Union[
    ArrayAccess,
    ArrayCreation,
    ArrayInitializer,
    Assign,
    Binary,
    BooleanLiteral,
    Cast,
    CharLiteral,
    ClassExpr,
    Conditional,
    DoubleLiteral,
    Enclosed,
    FieldAccess,
    InstanceOf,
    IntegerLiteral,
    Lambda,
    LongLiteral,
    MethodCall,
    MethodReference,
    Name,
    NullLiteral,
    ObjectCreation,
    StringLiteral,
    SuperExpr,
    ThisExpr,
    TypeExpr,
    Unary,
    VariableDeclaration,
]

NODE_TYPES = Expr.__args__

LITERAL_TYPES = (
    BooleanLiteral,
    CharLiteral,
    DoubleLiteral,
    IntegerLiteral,
    LongLiteral,
    NullLiteral,
    StringLiteral,
)
NUMERIC_LITERAL_TYPES = (DoubleLiteral, IntegerLiteral, LongLiteral)


def is_constant(node: Expr) -> bool:
    """Literal, or a sign applied to a numeric literal."""
    if isinstance(node, LITERAL_TYPES):
        return True
    return (
        isinstance(node, Unary)
        and node.prefix
        and node.op in ("-", "+")
        and isinstance(node.operand, NUMERIC_LITERAL_TYPES)
    )


def children(node: Expr) -> list[Expr]:
    if isinstance(node, ArrayAccess):
        return [node.name, node.index]
    if isinstance(node, ArrayCreation):
        kids = [d for d in node.dims if d is not None]
        return kids + ([node.initializer] if node.initializer else [])
    if isinstance(node, ArrayInitializer):
        return list(node.values)
    if isinstance(node, Assign):
        return [node.target, node.value]
    if isinstance(node, Binary):
        return [node.left, node.right]
    if isinstance(node, Cast):
        return [node.inner]
    if isinstance(node, Conditional):
        return [node.cond, node.then, node.otherwise]
    if isinstance(node, Enclosed):
        return [node.inner] if node.inner is not None else []
    if isinstance(node, FieldAccess):
        return [node.scope]
    if isinstance(node, InstanceOf):
        return [node.expr]
    if isinstance(node, Lambda):
        return [node.body]
    if isinstance(node, MethodCall):
        return ([node.scope] if node.scope is not None else []) + list(node.args)
    if isinstance(node, MethodReference):
        return [node.scope]
    if isinstance(node, ObjectCreation):
        return list(node.args)
    if isinstance(node, Unary):
        return [node.operand]
    if isinstance(node, VariableDeclaration):
        return [v.initializer for v in node.vars if v.initializer is not None]
    return []


def walk(node: Expr):
    yield node
    for child in children(node):
        yield from walk(child)


def _args(args) -> str:
    return "(" + ", ".join(to_source(a) for a in args) + ")"


def to_source(node: Expr) -> str:
    """Render a node back to Java source text (canonical spacing)."""
    if isinstance(node, ArrayAccess):
        return f"{to_source(node.name)}[{to_source(node.index)}]"
    if isinstance(node, ArrayCreation):
        dims = "".join(f"[{to_source(d)}]" if d is not None else "[]" for d in node.dims)
        init = " " + to_source(node.initializer) if node.initializer else ""
        return f"new {node.elem_type}{dims}{init}"
    if isinstance(node, ArrayInitializer):
        return "{" + ", ".join(to_source(v) for v in node.values) + "}"
    if isinstance(node, Assign):
        return f"{to_source(node.target)} {node.op} {to_source(node.value)}"
    if isinstance(node, Binary):
        return f"{to_source(node.left)} {node.op} {to_source(node.right)}"
    if isinstance(node, BooleanLiteral):
        return "true" if node.value else "false"
    if isinstance(node, Cast):
        return f"({node.type}) {to_source(node.inner)}"
    if isinstance(node, (CharLiteral, DoubleLiteral, IntegerLiteral, LongLiteral, StringLiteral)):
        return node.text
    if isinstance(node, ClassExpr):
        return f"{node.type_name}.class"
    if isinstance(node, Conditional):
        return f"{to_source(node.cond)} ? {to_source(node.then)} : {to_source(node.otherwise)}"
    if isinstance(node, Enclosed):
        return "(" + (to_source(node.inner) if node.inner is not None else "") + ")"
    if isinstance(node, FieldAccess):
        return f"{to_source(node.scope)}.{node.field_name}"
    if isinstance(node, InstanceOf):
        return f"{to_source(node.expr)} instanceof {node.type_name}"
    if isinstance(node, Lambda):
        params = ", ".join(node.params)
        head = f"({params})" if node.parenthesized else params
        return f"{head} -> {to_source(node.body)}"
    if isinstance(node, MethodCall):
        targs = node.type_args or ""
        if node.scope is None:
            return f"{targs}{node.name}{_args(node.args)}"
        return f"{to_source(node.scope)}.{targs}{node.name}{_args(node.args)}"
    if isinstance(node, MethodReference):
        return f"{to_source(node.scope)}::{node.identifier}"
    if isinstance(node, Name):
        return node.identifier
    if isinstance(node, NullLiteral):
        return "null"
    if isinstance(node, ObjectCreation):
        return f"new {node.type_name}{_args(node.args)}"
    if isinstance(node, SuperExpr):
        return f"{node.class_scope}.super" if node.class_scope else "super"
    if isinstance(node, ThisExpr):
        return f"{node.class_scope}.this" if node.class_scope else "this"
    if isinstance(node, TypeExpr):
        return node.type_name
    if isinstance(node, Unary):
        inner = to_source(node.operand)
        return f"{node.op}{inner}" if node.prefix else f"{inner}{node.op}"
    if isinstance(node, VariableDeclaration):
        parts = []
        for i, v in enumerate(node.vars):
            head = f"{v.type} {v.name}" if i == 0 else v.name
            if v.initializer is not None:
                head += f" = {to_source(v.initializer)}"
            parts.append(head)
        return ", ".join(parts)
    raise TypeError(f"not an expression node: {node!r}")
