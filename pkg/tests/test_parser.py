import re

import pytest
from hypothesis import given
from hypothesis import strategies as st

from assertconvert.java import nodes as n
from assertconvert.java.parser import ParseError, parse_java


def test_binary_division():
    assert parse_java("75 / 3") == n.Binary(n.IntegerLiteral("75"), "/", n.IntegerLiteral("3"))


def test_cast():
    assert parse_java("(long) 15") == n.Cast("long", n.IntegerLiteral("15"))


def test_conditional():
    assert parse_java("b==0?x:y") == n.Conditional(
        n.Binary(n.Name("b"), "==", n.IntegerLiteral("0")), n.Name("x"), n.Name("y")
    )


def test_precedence():
    tree = parse_java("a + b * c == d && !e")
    assert tree.op == "&&"
    assert tree.left.op == "=="
    assert tree.left.left.right == n.Binary(n.Name("b"), "*", n.Name("c"))
    assert tree.right == n.Unary("!", n.Name("e"), True)


def test_parenthesized_name_is_not_a_cast():
    assert parse_java("(a) + b") == n.Binary(n.Enclosed(n.Name("a")), "+", n.Name("b"))


def test_generic_method_and_nested_generics():
    tree = parse_java("Collections.<String>emptyList()")
    assert isinstance(tree, n.MethodCall) and tree.type_args
    decl = parse_java("Map<String, List<Integer>> m = null")
    assert isinstance(decl, n.VariableDeclaration)


@pytest.mark.parametrize(
    "src, kind",
    [
        ("myArray[0]", n.ArrayAccess),
        ("new int[] {1, 2}", n.ArrayCreation),
        ("x = 5", n.Assign),
        ("Object.class", n.ClassExpr),
        ("user.loginPassword", n.FieldAccess),
        ("o instanceof String", n.InstanceOf),
        ("(a, b) -> a + b", n.Lambda),
        ("x -> x", n.Lambda),
        ("String::valueOf", n.MethodReference),
        ("new SessionManager()", n.ObjectCreation),
        ("super.world", n.FieldAccess),
        ("World.this", n.ThisExpr),
        ("int", n.TypeExpr),
        ("i++", n.Unary),
        ("int myVar = 1", n.VariableDeclaration),
        ("99999999L", n.LongLiteral),
        ("'c'", n.CharLiteral),
        ("null", n.NullLiteral),
    ],
)
def test_node_kinds(src, kind):
    assert isinstance(parse_java(src), kind)


@pytest.mark.parametrize(
    "src",
    [
        "new Runnable() { public void run() {} }",
        "x -> { return x; }",
        "outer.new Inner()",
        "f(",
        "a +",
    ],
)
def test_rejected(src):
    with pytest.raises(ParseError):
        parse_java(src)


def test_parse_error_reports_expectation():
    with pytest.raises(ParseError) as info:
        parse_java("f(a b)")
    assert info.value.start >= 0


names = st.sampled_from(["a", "bVal", "cnt", "myObj"])


def exprs():
    leaf = st.one_of(names, st.integers(0, 999).map(str), st.just('"s"'))
    return st.recursive(
        leaf,
        lambda inner: st.one_of(
            st.tuples(inner, st.sampled_from(["+", "-", "*", "/", "==", "&&", "<"]), inner).map(
                lambda t: f"({t[0]} {t[1]} {t[2]})"
            ),
            st.tuples(names, st.lists(inner, max_size=3)).map(lambda t: f"{t[0]}.run({', '.join(t[1])})"),
            st.tuples(inner, inner, inner).map(lambda t: f"({t[0]} ? {t[1]} : {t[2]})"),
            inner.map(lambda e: f"!{e}"),
            st.tuples(names, inner).map(lambda t: f"{t[0]}[{t[1]}]"),
        ),
        max_leaves=12,
    )


@given(exprs())
def test_round_trip(src):
    tree = parse_java(src)
    assert re.sub(r"\s+", "", n.to_source(tree)) == re.sub(r"\s+", "", src)
    assert parse_java(n.to_source(tree)) == tree


@given(exprs())
def test_walk_is_finite_and_typed(src):
    tree = parse_java(src)
    seen = list(n.walk(tree))
    assert seen[0] is tree
    assert all(isinstance(node, n.NODE_TYPES) for node in seen)
