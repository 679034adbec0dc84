"""Identifier splitting and final text cleanup."""

from __future__ import annotations

import re

_WORD_RE = re.compile(
    r"[A-Z]+(?=[A-Z][a-z])"  # acronym run before a capitalised word: HTTPServer
    r"|[A-Z]?[a-z]+"
    r"|[A-Z]+"
    r"|\d+"
    r"|[^\W\d_]+"  # caseless letters from other scripts
)
_SEPARATOR_RE = re.compile(r"[_.$]+")


def split_camel_case(identifier: str) -> list[str]:
    """``getHTTPResponse2`` -> ``['get', 'http', 'response', '2']``."""
    words = []
    for chunk in _SEPARATOR_RE.split(identifier):
        words.extend(m.group(0).lower() for m in _WORD_RE.finditer(chunk))
    return words


def split_phrase(identifier: str) -> str:
    return " ".join(split_camel_case(identifier))


_QUOTED_RE = re.compile(r'"(?:[^"\\]|\\.)*"')
# dots between digits belong to a number and stay
_SEPARATORS_RE = re.compile(r"_+|(?<![0-9])\.|\.(?![0-9])")
_REPEAT_RE = re.compile(r"(?<!\S)(\S+) plus \1(?: plus \1)+(?!\S)")
_SPACES_RE = re.compile(r"\s+")


def _clean(segment: str) -> str:
    segment = _SEPARATORS_RE.sub(" ", segment)
    segment = _SPACES_RE.sub(" ", segment)
    return _REPEAT_RE.sub(lambda m: f"{m.group(1)} plus {m.group(1)}s", segment)


def _step(text: str) -> str:
    parts = []
    last = 0
    for m in _QUOTED_RE.finditer(text):
        parts.append(_clean(text[last : m.start()]))
        parts.append(m.group(0))
        last = m.end()
    parts.append(_clean(text[last:]))
    return _SPACES_RE.sub(" ", "".join(parts)).strip()


def readability_pass(text: str) -> str:
    """Separator removal, ``x plus x plus x`` -> ``x plus xs`` and space
    squeezing, repeated until nothing changes. Quoted literals are kept."""
    previous = None
    while text != previous:
        previous, text = text, _step(text)
    return text
