import pytest
from hypothesis import given
from hypothesis import strategies as st

from assertconvert import convert
from assertconvert.composer import CONVERTED, UNCONVERTIBLE, MissingPhrase, compose
from assertconvert.extractor import Condition, ParamAssignment
from assertconvert.java import nodes as n
from assertconvert.phrases.render import Phrase


def p(text):
    return Phrase(text, "test")


@pytest.mark.parametrize(
    "cond, expected, want",
    [
        (Condition.NOT_NULL, None, "my num is not null"),
        (Condition.TRUE, None, "my num is true"),
        (Condition.EQUALS, "24", "my num and 24 are equal"),
        (Condition.ARRAY_EQUALS, "24", "my num and 24 are equal"),
        (Condition.NOT_EQUALS, "24", "my num and 24 are not equal"),
        (Condition.SAME, "24", "my num is identical to 24"),
        (Condition.NOT_SAME, "24", "my num is not identical to 24"),
    ],
)
def test_templates(cond, expected, want):
    params = ParamAssignment(actual=n.Name("myNum"), expected=n.Name("x") if expected else None)
    out = compose(cond, params, p("my num"), expected=p(expected) if expected else None)
    assert out.sentence == want
    assert out.rule_trace[0] == f"Template.{cond.value}"


def test_delta_clause():
    params = ParamAssignment(actual=n.Name("a"), expected=n.Name("b"), delta=n.DoubleLiteral("0.01"))
    out = compose(Condition.EQUALS, params, p("a"), expected=p("b"), delta=p("0.01"))
    assert out.sentence == "a and b are equal within a margin of 0.01"


def test_missing_expected():
    with pytest.raises(MissingPhrase):
        compose(Condition.EQUALS, ParamAssignment(actual=n.Name("a")), p("a"))


@pytest.mark.parametrize("cond", [Condition.TRUE, Condition.FALSE, Condition.NULL, Condition.NOT_NULL])
def test_condition_word_fidelity(cond):
    out = convert(f"assert{cond.value}(flag);")
    assert out.sentence.endswith(" ".join(cond.words))


def test_every_item_takes_subject_position():
    out = convert('assertThat(names, everyItem(startsWith("My")));')
    assert out.sentence == 'every item in names starts with "my"'


def test_assert_that_string_actual():
    out = convert('assertThat("myValue", allOf(startsWith("my"), containsString("Val")));')
    assert out.sentence == '"myvalue" starts with "my" and contains string "val"'


def test_rule2_end_to_end():
    ctx = "class AccountTest { Account obj; Integer aNum;"
    want = "account id and integer as a string are equal"
    assert convert("assertEquals(obj.getID(), aNum.toString());", context=ctx).sentence == want
    assert convert("assertEquals(aNum.toString(), obj.getID());", context=ctx).sentence == want


@pytest.mark.parametrize(
    "stmt",
    ["assertThat(list, hasSize(3));", "assertEquals(a);", "assertTrue(new Runnable() { });"],
)
def test_unconvertible_keeps_raw_text(stmt):
    out = convert(stmt)
    assert out.status == UNCONVERTIBLE
    assert out.raw_text == stmt
    assert out.diagnostic


@given(
    st.sampled_from(["assertEquals", "assertNotEquals", "assertSame", "assertNotSame"]),
    st.sampled_from(["alpha", "betaValue", "x.getY()", "42"]),
    st.sampled_from(["gamma", "deltaValue", "z.compute()", '"s"']),
)
def test_outputs_lowercase_and_converted(method, a, b):
    out = convert(f"{method}({a}, {b});")
    assert out.status == CONVERTED
    assert out.sentence == out.sentence.lower()
    assert "_" not in out.sentence
