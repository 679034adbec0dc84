"""Hamcrest matcher trees for ``assertThat``: parsing and English templates."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Callable

from .java import nodes as n
from .phrases.lexicon import default_lexicon
from .phrases.render import Phrase, type_phrase


class MatcherKind(enum.Enum):
    ALL_OF = "allOf"
    ANY_OF = "anyOf"
    BOTH = "both"
    EITHER = "either"
    EVERY_ITEM = "everyItem"
    IS = "is"
    IS_A = "isA"
    ANYTHING = "anything"
    HAS_ITEM = "hasItem"
    HAS_ITEMS = "hasItems"
    EQUAL_TO = "equalTo"
    INSTANCE_OF = "instanceOf"
    NOT = "not"
    NULL_VALUE = "nullValue"
    NOT_NULL_VALUE = "notNullValue"
    SAME_INSTANCE = "sameInstance"
    STARTS_WITH = "startsWith"
    ENDS_WITH = "endsWith"
    CONTAINS_STRING = "containsString"


_BY_NAME = {k.value: k for k in MatcherKind}
_ALIASES = {"startWith": MatcherKind.STARTS_WITH}

# Hamcrest matchers outside the supported set; seeing one is an error, not a value
OTHER_HAMCREST = frozenset(
    """
    any theInstance describedAs hasSize empty emptyIterable emptyArray
    emptyCollectionOf emptyString isEmptyString isEmptyOrNullString
    emptyOrNullString blankString closeTo greaterThan greaterThanOrEqualTo
    lessThan lessThanOrEqualTo comparesEqualTo contains containsInAnyOrder
    containsInRelativeOrder hasEntry hasKey hasValue arrayContaining
    arrayContainingInAnyOrder arrayWithSize hasItemInArray isIn isOneOf in
    oneOf equalToIgnoringCase equalToIgnoringWhiteSpace equalToCompressingWhiteSpace
    containsStringIgnoringCase startsWithIgnoringCase endsWithIgnoringCase
    stringContainsInOrder matchesPattern matchesRegex hasToString hasProperty
    samePropertyValuesAs typeCompatibleWith iterableWithSize notANumber hasXPath
    hasLength isEmpty isNotEmpty
    """.split()
)

COMPOSITE_KINDS = frozenset({MatcherKind.ALL_OF, MatcherKind.ANY_OF, MatcherKind.BOTH, MatcherKind.EITHER})


class UnsupportedMatcher(Exception):
    def __init__(self, name: str, detail: str = ""):
        super().__init__(f"unsupported matcher {name}" + (f": {detail}" if detail else ""))
        self.name = name


@dataclass(frozen=True)
class MatcherNode:
    kind: MatcherKind
    overload: str
    values: tuple[n.Expr, ...] = ()
    nested: tuple["MatcherNode", ...] = ()
    # the ``.and(...)`` / ``.or(...)`` half of both/either
    chained: "MatcherNode | None" = None

    def depth(self) -> int:
        kids = list(self.nested) + ([self.chained] if self.chained else [])
        return 1 + max((k.depth() for k in kids), default=0)


@dataclass(frozen=True)
class Signature:
    kind: MatcherKind
    overload: str
    example: str


_SIGNATURES = [
    *[
        Signature(MatcherKind.ALL_OF, f"matchers-{k}", "allOf(" + ", ".join(f'containsString("{c}")' for c in "abcdef"[:k]) + ")")
        for k in range(2, 7)
    ],
    Signature(MatcherKind.ALL_OF, "matchers-varargs", 'allOf(startsWith("a"))'),
    *[
        Signature(MatcherKind.ANY_OF, f"matchers-{k}", "anyOf(" + ", ".join(f"equalTo({i})" for i in range(1, k + 1)) + ")")
        for k in range(2, 7)
    ],
    Signature(MatcherKind.ANY_OF, "matchers-varargs", "anyOf(nullValue())"),
    Signature(MatcherKind.BOTH, "matcher-and-matcher", 'both(startsWith("a")).and(endsWith("z"))'),
    Signature(MatcherKind.EITHER, "matcher-or-matcher", "either(equalTo(1)).or(equalTo(2))"),
    Signature(MatcherKind.EVERY_ITEM, "matcher", 'everyItem(startsWith("My"))'),
    Signature(MatcherKind.IS, "value", "is(5)"),
    Signature(MatcherKind.IS, "matcher", "is(equalTo(5))"),
    Signature(MatcherKind.IS, "class", "is(String.class)"),
    Signature(MatcherKind.IS_A, "class", "isA(Integer.class)"),
    Signature(MatcherKind.ANYTHING, "none", "anything()"),
    Signature(MatcherKind.ANYTHING, "description", 'anything("whatever")'),
    Signature(MatcherKind.HAS_ITEM, "value", "hasItem(3)"),
    Signature(MatcherKind.HAS_ITEM, "matcher", 'hasItem(startsWith("x"))'),
    Signature(MatcherKind.HAS_ITEMS, "values", "hasItems(1, 2)"),
    Signature(MatcherKind.HAS_ITEMS, "matchers", 'hasItems(startsWith("a"), endsWith("b"))'),
    Signature(MatcherKind.EQUAL_TO, "value", "equalTo(expectedName)"),
    Signature(MatcherKind.INSTANCE_OF, "class", "instanceOf(ArrayList.class)"),
    Signature(MatcherKind.NOT, "value", "not(0)"),
    Signature(MatcherKind.NOT, "matcher", "not(nullValue())"),
    Signature(MatcherKind.NULL_VALUE, "none", "nullValue()"),
    Signature(MatcherKind.NULL_VALUE, "class", "nullValue(String.class)"),
    Signature(MatcherKind.NOT_NULL_VALUE, "none", "notNullValue()"),
    Signature(MatcherKind.NOT_NULL_VALUE, "class", "notNullValue(Integer.class)"),
    Signature(MatcherKind.SAME_INSTANCE, "value", "sameInstance(original)"),
    Signature(MatcherKind.STARTS_WITH, "value", 'startsWith("Hello")'),
    Signature(MatcherKind.ENDS_WITH, "value", 'endsWith("World")'),
    Signature(MatcherKind.CONTAINS_STRING, "value", 'containsString("Val")'),
]


def enumerate_signatures() -> list[Signature]:
    """The 37 supported matcher overloads.

    allOf/anyOf count their fixed-arity (2 to 6) and varargs forms
    separately, as declared by Hamcrest; the optional reason argument of
    assertThat is not counted here.
    """
    return list(_SIGNATURES)


# -- parsing ---------------------------------------------------------------


def _qualifier_ok(scope: n.Expr | None) -> bool:
    # bare static import, or CoreMatchers.x / org.hamcrest.Matchers.x
    if scope is None:
        return True
    if isinstance(scope, n.Name):
        return scope.identifier[:1].isupper()
    if isinstance(scope, n.FieldAccess):
        return scope.field_name[:1].isupper() and _qualifier_ok(scope.scope)
    return False


def matcher_name(expr: n.Expr) -> str | None:
    """Hamcrest method name if ``expr`` looks like a matcher factory call."""
    if not isinstance(expr, n.MethodCall):
        return None
    if expr.name in ("and", "or") and _chain_root(expr) is not None:
        return _chain_root(expr).name
    if not _qualifier_ok(expr.scope):
        return None
    if expr.name in _BY_NAME or expr.name in _ALIASES or expr.name in OTHER_HAMCREST:
        return expr.name
    return None


def _chain_root(expr: n.MethodCall) -> n.MethodCall | None:
    node = expr
    while isinstance(node, n.MethodCall) and node.name in ("and", "or") and node.scope is not None:
        node = node.scope
    if isinstance(node, n.MethodCall) and node.name in ("both", "either") and _qualifier_ok(node.scope):
        return node
    return None


def is_matcher(expr: n.Expr) -> bool:
    return matcher_name(expr) is not None


def _arity(name: str, args, allowed: tuple[int, ...]) -> None:
    if len(args) not in allowed:
        raise UnsupportedMatcher(name, f"{len(args)} arguments")


def parse_matcher(expr: n.Expr) -> MatcherNode:
    if not isinstance(expr, n.MethodCall):
        raise UnsupportedMatcher(type(expr).__name__, "not a matcher call")
    if expr.name in ("and", "or") and _chain_root(expr) is not None:
        return _parse_chain(expr)
    if not _qualifier_ok(expr.scope):
        raise UnsupportedMatcher(expr.name, "not a static matcher factory")
    kind = _BY_NAME.get(expr.name) or _ALIASES.get(expr.name)
    if kind is None:
        raise UnsupportedMatcher(expr.name)
    args = expr.args
    name = kind.value

    if kind in (MatcherKind.ALL_OF, MatcherKind.ANY_OF):
        if not args or not all(is_matcher(a) for a in args):
            raise UnsupportedMatcher(name, "only matcher arguments are supported")
        overload = f"matchers-{len(args)}" if 2 <= len(args) <= 6 else "matchers-varargs"
        return MatcherNode(kind, overload, nested=tuple(parse_matcher(a) for a in args))
    if kind in (MatcherKind.BOTH, MatcherKind.EITHER):
        raise UnsupportedMatcher(name, "missing .and()/.or() combinator")
    if kind == MatcherKind.EVERY_ITEM:
        _arity(name, args, (1,))
        return MatcherNode(kind, "matcher", nested=(parse_matcher(args[0]),))
    if kind in (MatcherKind.IS, MatcherKind.HAS_ITEM, MatcherKind.NOT):
        _arity(name, args, (1,))
        if is_matcher(args[0]):
            return MatcherNode(kind, "matcher", nested=(parse_matcher(args[0]),))
        if kind == MatcherKind.IS and isinstance(args[0], n.ClassExpr):
            return MatcherNode(kind, "class", values=args)
        return MatcherNode(kind, "value", values=args)
    if kind in (MatcherKind.IS_A, MatcherKind.INSTANCE_OF):
        _arity(name, args, (1,))
        return MatcherNode(kind, "class", values=args)
    if kind in (MatcherKind.NULL_VALUE, MatcherKind.NOT_NULL_VALUE):
        _arity(name, args, (0, 1))
        return MatcherNode(kind, "class" if args else "none", values=args)
    if kind == MatcherKind.ANYTHING:
        _arity(name, args, (0, 1))
        return MatcherNode(kind, "description" if args else "none", values=args)
    if kind == MatcherKind.HAS_ITEMS:
        if not args:
            raise UnsupportedMatcher(name, "no arguments")
        flags = {is_matcher(a) for a in args}
        if flags == {True}:
            return MatcherNode(kind, "matchers", nested=tuple(parse_matcher(a) for a in args))
        if flags == {False}:
            return MatcherNode(kind, "values", values=args)
        raise UnsupportedMatcher(name, "mixed values and matchers")
    # equalTo, sameInstance, startsWith, endsWith, containsString
    _arity(name, args, (1,))
    if is_matcher(args[0]):
        raise UnsupportedMatcher(name, "expects a value, got a matcher")
    return MatcherNode(kind, "value", values=args)


def _parse_chain(expr: n.MethodCall) -> MatcherNode:
    """``both(a).and(b).and(c)`` -> both(a) chained to both(b) chained to c."""
    steps = []
    node = expr
    while node.name in ("and", "or"):
        steps.append(node)
        node = node.scope
    root = node
    kind = MatcherKind.BOTH if root.name == "both" else MatcherKind.EITHER
    combinator = "and" if kind == MatcherKind.BOTH else "or"
    _arity(root.name, root.args, (1,))
    operands = [root.args[0]]
    for step in reversed(steps):
        if step.name != combinator:
            raise UnsupportedMatcher(root.name, f"mixed .{step.name}() combinator")
        _arity(f"{root.name}..{step.name}", step.args, (1,))
        operands.append(step.args[0])
    parsed = [parse_matcher(o) for o in operands]
    overload = "matcher-and-matcher" if kind == MatcherKind.BOTH else "matcher-or-matcher"
    chained = parsed[-1]
    for left in reversed(parsed[1:-1]):
        chained = MatcherNode(kind, overload, nested=(left,), chained=chained)
    return MatcherNode(kind, overload, nested=(parsed[0],), chained=chained)


# -- rendering -------------------------------------------------------------


ValueRenderer = Callable[[n.Expr], Phrase]


def _type_arg(expr: n.Expr, render_value: ValueRenderer) -> tuple[str, tuple[str, ...]]:
    if isinstance(expr, n.ClassExpr):
        return type_phrase(expr.type_name), ()
    phrase = render_value(expr)
    return phrase.text, phrase.trace


def _negate(inner: Phrase, nested: MatcherNode) -> str:
    text = inner.text
    if nested.kind in COMPOSITE_KINDS:
        return "is not such that it " + text
    if nested.kind == MatcherKind.EVERY_ITEM:
        return "not " + text
    if text.startswith("is not "):
        return "is " + text[len("is not "):]
    if text.startswith("is "):
        return "is not " + text[len("is "):]
    head, _, rest = text.partition(" ")
    base = default_lexicon().base_form(head, participles=False)
    if base is not None and base != head:
        return " ".join(p for p in ("does not", base, rest) if p)
    return "is not " + text


def render_matcher(node: MatcherNode, render_value: ValueRenderer) -> Phrase:
    """English predicate for a matcher tree, to follow the subject phrase."""
    kind = node.kind
    trace: list[str] = [f"Matcher.{kind.value}.{node.overload}"]

    def sub(child: MatcherNode) -> str:
        phrase = render_matcher(child, render_value)
        trace.extend(phrase.trace)
        return phrase.text

    def value(expr: n.Expr) -> str:
        phrase = render_value(expr)
        trace.extend(phrase.trace)
        return phrase.text

    if kind == MatcherKind.IS:
        if node.overload == "matcher":
            text = sub(node.nested[0])
        elif node.overload == "class":
            type_text, extra = _type_arg(node.values[0], render_value)
            trace.extend(extra)
            text = "is an instance of " + type_text
        else:
            text = "is " + value(node.values[0])
    elif kind in (MatcherKind.IS_A, MatcherKind.INSTANCE_OF):
        type_text, extra = _type_arg(node.values[0], render_value)
        trace.extend(extra)
        text = "is an instance of " + type_text
    elif kind == MatcherKind.ANYTHING:
        text = "is anything"
    elif kind == MatcherKind.EQUAL_TO:
        text = "is equal to " + value(node.values[0])
    elif kind == MatcherKind.NOT:
        if node.overload == "matcher":
            inner = render_matcher(node.nested[0], render_value)
            trace.extend(inner.trace)
            text = _negate(inner, node.nested[0])
        else:
            text = "is not " + value(node.values[0])
    elif kind == MatcherKind.NULL_VALUE:
        text = "is null"
    elif kind == MatcherKind.NOT_NULL_VALUE:
        text = "is not null"
    elif kind == MatcherKind.SAME_INSTANCE:
        text = "is the same instance as " + value(node.values[0])
    elif kind == MatcherKind.STARTS_WITH:
        text = "starts with " + value(node.values[0])
    elif kind == MatcherKind.ENDS_WITH:
        text = "ends with " + value(node.values[0])
    elif kind == MatcherKind.CONTAINS_STRING:
        text = "contains string " + value(node.values[0])
    elif kind == MatcherKind.HAS_ITEM:
        if node.overload == "matcher":
            text = "has an item that " + sub(node.nested[0])
        else:
            text = "has an item that is equal to " + value(node.values[0])
    elif kind == MatcherKind.HAS_ITEMS:
        if node.overload == "matchers":
            text = "has items that " + " and ".join(sub(m) for m in node.nested)
        else:
            text = "has items " + " and ".join(value(v) for v in node.values)
    elif kind == MatcherKind.EVERY_ITEM:
        text = "every item " + sub(node.nested[0])
    elif kind == MatcherKind.ALL_OF:
        text = " and ".join(sub(m) for m in node.nested)
    elif kind == MatcherKind.ANY_OF:
        text = " or ".join(sub(m) for m in node.nested)
    else:
        connective = " and " if kind == MatcherKind.BOTH else " or "
        text = sub(node.nested[0]) + connective + sub(node.chained)
    return Phrase(text.lower(), trace[0], tuple(trace))
