import pytest
from hypothesis import given
from hypothesis import strategies as st

from assertconvert.java.parser import parse_java
from assertconvert.matchers import (
    MatcherKind,
    UnsupportedMatcher,
    enumerate_signatures,
    parse_matcher,
    render_matcher,
)
from assertconvert.phrases.render import render_expr


def tree(src):
    return parse_matcher(parse_java(src))


def text(src):
    return render_matcher(tree(src), lambda e: render_expr(e, quote_strings=True)).text


def test_nineteen_kinds():
    assert len(MatcherKind) == 19


def test_thirty_seven_signatures():
    sigs = enumerate_signatures()
    assert len(sigs) == 37
    assert len({(s.kind, s.overload) for s in sigs}) == 37
    assert {s.kind for s in sigs} == set(MatcherKind)
    keys = {(s.kind.value, s.overload) for s in sigs}
    assert {("equalTo", "value"), ("is", "value"), ("is", "matcher"), ("anything", "none")} <= keys


@pytest.mark.parametrize("sig", enumerate_signatures(), ids=lambda s: f"{s.kind.value}-{s.overload}")
def test_signature_examples_parse_and_render(sig):
    node = tree(sig.example)
    assert node.kind is sig.kind
    assert node.overload == sig.overload
    assert text(sig.example)


def test_all_of_tree():
    node = tree('allOf(startsWith("my"), containsString("Val"))')
    assert node.kind is MatcherKind.ALL_OF
    assert [c.kind for c in node.nested] == [MatcherKind.STARTS_WITH, MatcherKind.CONTAINS_STRING]


def test_is_nesting():
    node = tree("is(equalTo(5))")
    assert node.overload == "matcher"
    assert node.nested[0].kind is MatcherKind.EQUAL_TO


@pytest.mark.parametrize(
    "src, want",
    [
        ('everyItem(startsWith("My"))', 'every item starts with "my"'),
        ('allOf(startsWith("my"), containsString("Val"))', 'starts with "my" and contains string "val"'),
        ("not(nullValue())", "is not null"),
        ("not(not(nullValue()))", "is null"),
        ('not(startsWith("a"))', 'does not start with "a"'),
        ("is(String.class)", "is an instance of string"),
        ('anyOf(equalTo(1), nullValue())', "is equal to 1 or is null"),
        ('either(equalTo(1)).or(equalTo(2))', "is equal to 1 or is equal to 2"),
        ('both(startsWith("a")).and(endsWith("z"))', 'starts with "a" and ends with "z"'),
        ('startWith("My")', 'starts with "my"'),
    ],
)
def test_templates(src, want):
    assert text(src) == want


@pytest.mark.parametrize("src", ["hasSize(3)", "describedAs(\"x\", anything())", "any(String.class)", "closeTo(1.0, 0.1)"])
def test_unsupported(src):
    with pytest.raises(UnsupportedMatcher):
        tree(src)


leaves = st.sampled_from(['startsWith("a")', "nullValue()", "equalTo(2)", 'containsString("b")', "anything()"])


def matcher_src():
    return st.recursive(
        leaves,
        lambda inner: st.one_of(
            inner.map(lambda m: f"not({m})"),
            inner.map(lambda m: f"is({m})"),
            inner.map(lambda m: f"hasItem({m})"),
            st.lists(inner, min_size=2, max_size=3).map(lambda ms: f"allOf({', '.join(ms)})"),
            st.lists(inner, min_size=2, max_size=3).map(lambda ms: f"anyOf({', '.join(ms)})"),
        ),
        max_leaves=8,
    )


@given(matcher_src())
def test_depth_matches_nesting(src):
    # every matcher call opens one paren level; depth is the deepest nesting
    depth = level = 0
    for ch in src:
        if ch == "(":
            level += 1
            depth = max(depth, level)
        elif ch == ")":
            level -= 1
    assert tree(src).depth() == depth


@given(st.sampled_from(["allOf", "anyOf", "hasItem", "is"]), leaves)
def test_render_is_compositional(outer, leaf):
    inner = text(leaf)
    assert inner in text(f"{outer}({leaf})")
