"""Condition templates that join role phrases into one sentence."""

from __future__ import annotations

from dataclasses import dataclass

from .extractor import Condition, ParamAssignment
from .java.scanner import Span
from .phrases.render import Phrase
from .phrases.words import readability_pass

CONVERTED = "converted"
UNCONVERTIBLE = "unconvertible"


class MissingPhrase(ValueError):
    pass


@dataclass(frozen=True)
class ConvertedAssertion:
    span: Span | None
    condition: Condition | None
    sentence: str
    status: str = CONVERTED
    diagnostic: str | None = None
    raw_text: str = ""
    line: int = 0
    rule_trace: tuple[str, ...] = ()


def _leads_with_every_item(matcher: Phrase) -> bool:
    for rule in matcher.trace:
        if rule == "Matcher.is.matcher":
            continue
        return rule == "Matcher.everyItem.matcher"
    return False


def compose(
    condition: Condition,
    params: ParamAssignment,
    actual: Phrase,
    expected: Phrase | None = None,
    matcher: Phrase | None = None,
    delta: Phrase | None = None,
) -> ConvertedAssertion:
    if actual is None:
        raise MissingPhrase("actual")
    subject = actual.text
    trace = [f"Template.{condition.value}", *actual.trace]

    def need(phrase: Phrase | None, role: str) -> str:
        if phrase is None:
            raise MissingPhrase(f"{role} phrase required for {condition.value}")
        trace.extend(phrase.trace)
        return phrase.text

    if condition in (Condition.TRUE, Condition.FALSE, Condition.NULL, Condition.NOT_NULL):
        sentence = f"{subject} is {' '.join(condition.words)}"
    elif condition in (Condition.EQUALS, Condition.ARRAY_EQUALS):
        sentence = f"{subject} and {need(expected, 'expected')} are equal"
    elif condition == Condition.NOT_EQUALS:
        sentence = f"{subject} and {need(expected, 'expected')} are not equal"
    elif condition == Condition.SAME:
        sentence = f"{subject} is identical to {need(expected, 'expected')}"
    elif condition == Condition.NOT_SAME:
        sentence = f"{subject} is not identical to {need(expected, 'expected')}"
    else:
        predicate = need(matcher, "matcher")
        if _leads_with_every_item(matcher):
            rest = predicate[len("every item "):]
            sentence = f"every item in {subject} {rest}"
        else:
            sentence = f"{subject} {predicate}"
    if params.delta is not None:
        sentence += f" within a margin of {need(delta, 'delta')}"
    return ConvertedAssertion(
        span=None,
        condition=condition,
        sentence=readability_pass(sentence.lower()),
        rule_trace=tuple(trace),
    )
