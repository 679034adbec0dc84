import pytest
from hypothesis import given
from hypothesis import strategies as st

from assertconvert.extractor import (
    ArityMismatch,
    AssertionCall,
    Condition,
    UnknownAssertion,
    classify_condition,
    disambiguate_expected_actual,
    identify_params,
    is_message_literal,
)
from assertconvert.java import nodes as n
from assertconvert.java.parser import parse_java
from assertconvert.java.scanner import Span
from assertconvert.java.symbols import build_symbol_table


def call(src):
    tree = parse_java(src)
    return AssertionCall(classify_condition(tree.name), tree.args, Span(0, len(src)), src)


@pytest.mark.parametrize(
    "name, cond",
    [
        ("assertNotNull", Condition.NOT_NULL),
        ("assertThat", Condition.THAT),
        ("assertArrayEquals", Condition.ARRAY_EQUALS),
        ("assertNotEquals", Condition.NOT_EQUALS),
    ],
)
def test_classify(name, cond):
    assert classify_condition(name) is cond


@pytest.mark.parametrize("name", ["assertFoo", "assertion", "equals"])
def test_unknown(name):
    with pytest.raises(UnknownAssertion):
        classify_condition(name)


@pytest.mark.parametrize("cond", list(Condition))
def test_condition_words_round_trip(cond):
    # the condition is recovered from the method name alone
    assert classify_condition("assert" + cond.value) is cond


def test_message_expected_actual():
    p = identify_params(call('assertEquals("num1 not equal to num2", num1, num2)'))
    assert p.message == n.StringLiteral('"num1 not equal to num2"')
    assert (p.expected, p.actual) == (n.Name("num1"), n.Name("num2"))


def test_delta():
    p = identify_params(call("assertEquals(num1, num2, 0.01)"))
    assert (p.expected, p.actual, p.delta) == (n.Name("num1"), n.Name("num2"), n.DoubleLiteral("0.01"))
    assert p.message is None


def test_four_args():
    p = identify_params(call('assertEquals("m", 1.0, x, 0.1)'))
    assert p.message is not None and p.delta == n.DoubleLiteral("0.1")


def test_that_with_string_actual():
    p = identify_params(call('assertThat("myValue", allOf(startsWith("my"), containsString("Val")))'))
    assert p.actual == n.StringLiteral('"myValue"')
    assert p.matcher.name == "allOf"


def test_that_with_reason():
    p = identify_params(call('assertThat("why", x, is(3))'))
    assert p.message is not None and p.actual == n.Name("x")


def test_unary_with_message():
    p = identify_params(call('assertTrue("ready", ready)'))
    assert p.actual == n.Name("ready")


@pytest.mark.parametrize(
    "src",
    ["assertTrue(a, b)", "assertEquals(a)", "assertSame(a, b, c)", "assertThat(x)", "assertThat(a, b, c, d)"],
)
def test_arity_mismatch(src):
    with pytest.raises(ArityMismatch):
        identify_params(call(src))


def test_too_many_args_rejected_at_construction():
    with pytest.raises(ArityMismatch):
        call("assertEquals(a, b, c, d, e)")


def test_message_literal_variants():
    assert is_message_literal(parse_java('"x"'))
    assert is_message_literal(parse_java('"count: " + n'))
    assert not is_message_literal(parse_java('n + "x"'))
    assert not is_message_literal(parse_java("msg"))


def test_rule1_literal_is_expected():
    e, a = disambiguate_expected_actual(parse_java("myObj.getId()"), parse_java("2456"))
    assert e == n.IntegerLiteral("2456")
    assert a == parse_java("myObj.getId()")


def test_rule2_class_under_test_call_is_actual():
    symbols = build_symbol_table("Account obj = new Account();", filename="AccountTest.java")
    e, a = disambiguate_expected_actual(parse_java("obj.getID()"), parse_java("aNum.toString()"), symbols)
    assert a == parse_java("obj.getID()")
    e, a = disambiguate_expected_actual(parse_java("aNum.toString()"), parse_java("obj.getID()"), symbols)
    assert a == parse_java("obj.getID()")


def test_rule3_names_keep_order():
    assert disambiguate_expected_actual(n.Name("x"), n.Name("y")) == (n.Name("x"), n.Name("y"))


idents = st.sampled_from(["a", "b", "total", "user"])
consts = st.one_of(st.integers(0, 99).map(str), st.just('"s"'), st.just("null"), st.just("-3"))


@given(consts, idents, idents)
def test_rule1_is_order_independent(c, scope, method):
    lit = parse_java(c)
    mc = parse_java(f"{scope}.{method}()")
    assert disambiguate_expected_actual(lit, mc) == disambiguate_expected_actual(mc, lit) == (lit, mc)
