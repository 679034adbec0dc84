"""Assertion conditions and parameter-role identification."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .java import nodes as n
from .java.scanner import Span
from .java.symbols import EMPTY, UNKNOWN, SymbolTable, is_numeric_type
from .phrases.words import split_camel_case


class Condition(enum.Enum):
    TRUE = "True"
    FALSE = "False"
    NULL = "Null"
    NOT_NULL = "NotNull"
    EQUALS = "Equals"
    NOT_EQUALS = "NotEquals"
    ARRAY_EQUALS = "ArrayEquals"
    SAME = "Same"
    NOT_SAME = "NotSame"
    THAT = "That"

    @property
    def words(self) -> list[str]:
        return split_camel_case(self.value)


UNARY_CONDITIONS = frozenset({Condition.TRUE, Condition.FALSE, Condition.NULL, Condition.NOT_NULL})
BINARY_CONDITIONS = frozenset(
    {Condition.EQUALS, Condition.NOT_EQUALS, Condition.ARRAY_EQUALS, Condition.SAME, Condition.NOT_SAME}
)
DELTA_CONDITIONS = frozenset({Condition.EQUALS, Condition.NOT_EQUALS, Condition.ARRAY_EQUALS})


class UnknownAssertion(ValueError):
    pass


class ArityMismatch(ValueError):
    pass


@dataclass(frozen=True)
class AssertionCall:
    condition: Condition
    args: tuple[n.Expr, ...]
    span: Span
    raw_text: str

    def __post_init__(self):
        if not 1 <= len(self.args) <= 4:
            raise ArityMismatch(f"assert{self.condition.value} with {len(self.args)} arguments")


@dataclass(frozen=True)
class ParamAssignment:
    actual: n.Expr
    message: n.Expr | None = None
    expected: n.Expr | None = None
    delta: n.Expr | None = None
    matcher: n.Expr | None = None


def classify_condition(method_name: str) -> Condition:
    if not method_name.startswith("assert"):
        raise UnknownAssertion(method_name)
    words = split_camel_case(method_name)[1:]
    for condition in Condition:
        if condition.words == words:
            return condition
    raise UnknownAssertion(method_name)


def is_message_literal(node: n.Expr) -> bool:
    """A string literal, or a concatenation led by one."""
    while isinstance(node, n.Binary) and node.op == "+":
        node = node.left
    while isinstance(node, n.Enclosed) and node.inner is not None:
        node = node.inner
    return isinstance(node, n.StringLiteral)


def _expr_type(node: n.Expr, symbols: SymbolTable, at: int | None) -> str:
    if isinstance(node, n.Name):
        return symbols.type_of(node.identifier, at)
    if isinstance(node, n.FieldAccess) and isinstance(node.scope, n.ThisExpr):
        return symbols.type_of(node.field_name, at)
    return UNKNOWN


def is_numeric(node: n.Expr, symbols: SymbolTable = EMPTY, at: int | None = None) -> bool:
    if isinstance(node, n.NUMERIC_LITERAL_TYPES):
        return True
    if isinstance(node, n.Unary) and node.op in ("-", "+"):
        return is_numeric(node.operand, symbols, at)
    if isinstance(node, n.Enclosed) and node.inner is not None:
        return is_numeric(node.inner, symbols, at)
    return is_numeric_type(_expr_type(node, symbols, at))


def identify_params(
    call: AssertionCall, symbols: SymbolTable = EMPTY
) -> ParamAssignment:
    """Assign roles by argument count and order; expected/actual are
    provisional until ``disambiguate_expected_actual``."""
    cond = call.condition
    args = call.args
    count = len(args)
    at = call.span.start
    mismatch = ArityMismatch(f"assert{cond.value} with {count} arguments")

    if cond == Condition.THAT:
        if count == 2:
            return ParamAssignment(actual=args[0], matcher=args[1])
        if count == 3 and is_message_literal(args[0]):
            return ParamAssignment(message=args[0], actual=args[1], matcher=args[2])
        raise mismatch

    if count == 1:
        if cond in UNARY_CONDITIONS:
            return ParamAssignment(actual=args[0])
        raise mismatch
    if count == 2:
        if cond in UNARY_CONDITIONS:
            if is_message_literal(args[0]):
                return ParamAssignment(message=args[0], actual=args[1])
            raise mismatch
        return ParamAssignment(expected=args[0], actual=args[1])
    if cond in UNARY_CONDITIONS:
        raise mismatch
    if count == 3:
        if is_message_literal(args[0]):
            return ParamAssignment(message=args[0], expected=args[1], actual=args[2])
        if cond in DELTA_CONDITIONS and is_numeric(args[2], symbols, at):
            return ParamAssignment(expected=args[0], actual=args[1], delta=args[2])
        raise mismatch
    if cond in DELTA_CONDITIONS:
        return ParamAssignment(message=args[0], expected=args[1], actual=args[2], delta=args[3])
    raise mismatch


def _receiver_root(call: n.MethodCall) -> n.Expr | None:
    node = call.scope
    while True:
        if isinstance(node, n.MethodCall) and node.scope is not None:
            node = node.scope
        elif isinstance(node, (n.FieldAccess,)) and not isinstance(node.scope, n.ThisExpr):
            node = node.scope
        elif isinstance(node, n.Enclosed) and node.inner is not None:
            node = node.inner
        else:
            return node


def invoked_on_class_under_test(call: n.MethodCall, symbols: SymbolTable, at: int | None = None) -> bool:
    root = _receiver_root(call)
    if root is None:
        return False
    if isinstance(root, n.ObjectCreation):
        return symbols.is_class_under_test(root.type_name)
    if isinstance(root, n.Name):
        declared = symbols.type_of(root.identifier, at)
        if declared != UNKNOWN:
            return symbols.is_class_under_test(declared)
        # static call on the class itself
        return symbols.is_class_under_test(root.identifier)
    if isinstance(root, n.FieldAccess):
        return symbols.is_class_under_test(symbols.type_of(root.field_name, at))
    return False


def disambiguate_expected_actual(
    p1: n.Expr, p2: n.Expr, symbols: SymbolTable = EMPTY, at: int | None = None
) -> tuple[n.Expr, n.Expr]:
    """Return ``(expected, actual)`` using the constant / class-under-test
    heuristics, falling back to the declared API order."""
    if n.is_constant(p1) and isinstance(p2, n.MethodCall):
        return p1, p2
    if n.is_constant(p2) and isinstance(p1, n.MethodCall):
        return p2, p1
    if isinstance(p1, n.MethodCall) and isinstance(p2, n.MethodCall):
        first = invoked_on_class_under_test(p1, symbols, at)
        second = invoked_on_class_under_test(p2, symbols, at)
        if first and not second:
            return p2, p1
        if second and not first:
            return p1, p2
    return p1, p2
