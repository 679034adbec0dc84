"""Convert JUnit assertion statements into English sentences."""

from .composer import ConvertedAssertion, compose
from .extractor import Condition, classify_condition, disambiguate_expected_actual, identify_params
from .matchers import MatcherKind, MatcherNode, enumerate_signatures, parse_matcher, render_matcher
from .pipeline import convert, convert_call, convert_source

__all__ = [
    "Condition",
    "ConvertedAssertion",
    "MatcherKind",
    "MatcherNode",
    "classify_condition",
    "compose",
    "convert",
    "convert_call",
    "convert_source",
    "disambiguate_expected_actual",
    "enumerate_signatures",
    "identify_params",
    "parse_matcher",
    "render_matcher",
]
