from .lexicon import VerbLexicon, default_lexicon, past_tense
from .render import Phrase, classify_method_name, render_expr
from .words import readability_pass, split_camel_case

__all__ = [
    "Phrase",
    "VerbLexicon",
    "classify_method_name",
    "default_lexicon",
    "past_tense",
    "readability_pass",
    "render_expr",
    "split_camel_case",
]
