"""End-to-end conversion: source text in, one ConvertedAssertion per assert."""

from __future__ import annotations

from dataclasses import replace

from . import matchers
from .composer import UNCONVERTIBLE, ConvertedAssertion, MissingPhrase, compose
from .extractor import (
    ArityMismatch,
    AssertionCall,
    Condition,
    UnknownAssertion,
    classify_condition,
    disambiguate_expected_actual,
    identify_params,
)
from .java import nodes as n
from .java.lexer import JavaSyntaxError
from .java.parser import parse_expression
from .java.scanner import ScannedAssertion, scan_assertions
from .java.symbols import SymbolTable, build_symbol_table
from .phrases.lexicon import VerbLexicon
from .phrases.render import render_expr

_FAILURES = (JavaSyntaxError, ArityMismatch, UnknownAssertion, matchers.UnsupportedMatcher, MissingPhrase)


def convert_call(
    scanned: ScannedAssertion, symbols: SymbolTable, lexicon: VerbLexicon | None = None
) -> ConvertedAssertion:
    condition: Condition | None = None
    try:
        condition = classify_condition(scanned.method)
        call_expr = parse_expression(list(scanned.tokens))
        if not isinstance(call_expr, n.MethodCall):
            raise UnknownAssertion(scanned.method)
        call = AssertionCall(condition, call_expr.args, scanned.span, scanned.text)
        params = identify_params(call, symbols)
        at = scanned.span.start

        def phrase(node, quote=False):
            return render_expr(node, symbols, lexicon=lexicon, quote_strings=quote, at=at)

        if condition == Condition.THAT:
            tree = matchers.parse_matcher(params.matcher)
            matcher_phrase = matchers.render_matcher(tree, lambda e: phrase(e, quote=True))
            result = compose(condition, params, phrase(params.actual, quote=True), matcher=matcher_phrase)
        else:
            expected = actual = params.actual
            if params.expected is not None:
                expected, actual = disambiguate_expected_actual(params.expected, params.actual, symbols, at)
                params = replace(params, expected=expected, actual=actual)
            result = compose(
                condition,
                params,
                phrase(actual),
                expected=phrase(expected) if params.expected is not None else None,
                delta=phrase(params.delta) if params.delta is not None else None,
            )
    except _FAILURES as exc:
        return ConvertedAssertion(
            span=scanned.span,
            condition=condition,
            sentence="",
            status=UNCONVERTIBLE,
            diagnostic=f"{type(exc).__name__}: {exc}",
            raw_text=scanned.text,
            line=scanned.line,
        )
    return replace(result, span=scanned.span, raw_text=scanned.text, line=scanned.line)


def convert_source(
    source: str, filename: str | None = None, lexicon: VerbLexicon | None = None
) -> list[ConvertedAssertion]:
    symbols = build_symbol_table(source, filename)
    return [convert_call(s, symbols, lexicon) for s in scan_assertions(source)]


def convert(statement: str, context: str = "", lexicon: VerbLexicon | None = None) -> ConvertedAssertion:
    """Convert the first assertion in ``statement``.

    ``context`` is extra Java text (declarations, a class header) used only
    to build the symbol table.
    """
    offset = len(context) + 1 if context else 0
    source = f"{context}\n{statement}" if context else statement
    symbols = build_symbol_table(source)
    found = [s for s in scan_assertions(source) if s.span.start >= offset]
    if not found:
        raise ValueError(f"no assertion found in {statement!r}")
    return convert_call(found[0], symbols, lexicon)
