"""Verb lexicon and English past-tense inflection.

A static word list stands in for a part-of-speech tagger: the method-name
rules only need to know whether a word is a verb, an adjective, or plausibly
a noun.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from importlib import resources
from pathlib import Path

IRREGULAR_PAST = {
    "be": "was", "bear": "bore", "beat": "beat", "become": "became",
    "begin": "began", "bend": "bent", "bet": "bet", "bind": "bound",
    "bite": "bit", "bleed": "bled", "blow": "blew", "break": "broke",
    "breed": "bred", "bring": "brought", "broadcast": "broadcast",
    "build": "built", "burst": "burst", "buy": "bought", "cast": "cast",
    "catch": "caught", "choose": "chose", "cling": "clung", "come": "came",
    "cost": "cost", "creep": "crept", "cut": "cut", "deal": "dealt",
    "dig": "dug", "do": "did", "draw": "drew", "drink": "drank",
    "drive": "drove", "eat": "ate", "fall": "fell", "feed": "fed",
    "feel": "felt", "fight": "fought", "find": "found", "fit": "fit",
    "flee": "fled", "fling": "flung", "fly": "flew", "forbid": "forbade",
    "forget": "forgot", "forgive": "forgave", "freeze": "froze",
    "get": "got", "give": "gave", "go": "went", "grind": "ground",
    "grow": "grew", "hang": "hung", "have": "had", "hear": "heard",
    "hide": "hid", "hit": "hit", "hold": "held", "hurt": "hurt",
    "keep": "kept", "know": "knew", "lay": "laid", "lead": "led",
    "leave": "left", "lend": "lent", "let": "let", "lie": "lay",
    "light": "lit", "lose": "lost", "make": "made", "mean": "meant",
    "meet": "met", "mislead": "misled", "overwrite": "overwrote",
    "override": "overrode", "pay": "paid", "put": "put", "quit": "quit",
    "read": "read", "rebuild": "rebuilt", "rewrite": "rewrote",
    "ride": "rode", "ring": "rang", "rise": "rose", "run": "ran",
    "say": "said", "see": "saw", "seek": "sought", "sell": "sold",
    "send": "sent", "set": "set", "shake": "shook", "shed": "shed",
    "shine": "shone", "shoot": "shot", "show": "showed", "shrink": "shrank",
    "shut": "shut", "sing": "sang", "sink": "sank", "sit": "sat",
    "sleep": "slept", "slide": "slid", "speak": "spoke", "spend": "spent",
    "spin": "spun", "split": "split", "spread": "spread", "stand": "stood",
    "steal": "stole", "stick": "stuck", "sting": "stung", "strike": "struck",
    "swear": "swore", "sweep": "swept", "swim": "swam", "swing": "swung",
    "take": "took", "teach": "taught", "tear": "tore", "tell": "told",
    "think": "thought", "throw": "threw", "understand": "understood",
    "undo": "undid", "unbind": "unbound", "unset": "unset", "upset": "upset",
    "wake": "woke", "wear": "wore", "weave": "wove", "win": "won",
    "wind": "wound", "withdraw": "withdrew", "write": "wrote",
}

# participles that differ from the simple past
IRREGULAR_PARTICIPLE = {
    "be": "been", "bear": "borne", "redo": "redone", "rerun": "rerun", "begin": "begun", "bite": "bitten",
    "blow": "blown", "break": "broken", "choose": "chosen", "come": "come",
    "do": "done", "draw": "drawn", "drink": "drunk", "drive": "driven",
    "eat": "eaten", "fall": "fallen", "fly": "flown", "forbid": "forbidden",
    "forget": "forgotten", "forgive": "forgiven", "freeze": "frozen",
    "get": "gotten", "give": "given", "go": "gone", "grow": "grown",
    "hide": "hidden", "know": "known", "lie": "lain", "overwrite": "overwritten",
    "override": "overridden", "rewrite": "rewritten", "ride": "ridden",
    "ring": "rung", "rise": "risen", "run": "run", "see": "seen",
    "shake": "shaken", "show": "shown", "shrink": "shrunk", "sing": "sung",
    "sink": "sunk", "speak": "spoken", "steal": "stolen", "swear": "sworn",
    "swim": "swum", "take": "taken", "tear": "torn", "throw": "thrown",
    "undo": "undone", "wake": "woken", "wear": "worn", "weave": "woven",
    "withdraw": "withdrawn", "write": "written",
}

THIRD_PERSON_IRREGULAR = {"is": "be", "has": "have", "does": "do", "are": "be"}

ADJECTIVES = frozenset(
    """
    new old first last next previous current default empty full valid invalid
    active inactive enabled disabled open closed public private final static
    main primary secondary temporary temp local remote global initial max min
    maximum minimum large small big little long short high low top bottom left
    right upper lower null same different other single multiple unique
    random raw simple complex basic custom dirty clean fresh stale old latest
    early late live dead ready pending visible hidden blank whole partial
    external internal original native generic specific exact correct wrong
    good bad best worst true false all any some each every
    """.split()
)

FUNCTION_WORDS = frozenset(
    """
    a an the to by with from of in on at for as and or not nor if but so
    all any some each every no none this that these those it its than then
    when while after before until without within via per up down out off
    over under into onto about between through is are was were be been
    """.split()
)

# heads of noun compounds a tagger reads as nouns ("check credentials")
NOUN_AMBIGUOUS = frozenset(
    """
    check test call process request report record display list map filter
    count value result return order name type view index score group stream
    query queue match hash cache record point sign round ship post trace
    default empty offset page label sample snapshot profile project quote
    reference tag pipe journal branch batch chunk bundle mirror loop
    """.split()
)

VERB_SUFFIXES = ("ize", "ify")

AUXILIARIES = frozenset({"is", "get", "has", "have", "do", "does", "can", "should", "will", "be", "are", "was"})

_VOWEL_GROUPS = re.compile(r"[aeiou]+|(?<=[^aeiou])y(?![aeiou])")


def _syllables(word: str) -> int:
    return len(_VOWEL_GROUPS.findall(word)) or 1


def regular_past(verb: str) -> str:
    if verb.endswith("e"):
        return verb + "d"
    if len(verb) > 1 and verb.endswith("y") and verb[-2] not in "aeiou":
        return verb[:-1] + "ied"
    if (
        len(verb) >= 3
        and verb[-1] not in "aeiouwxy"
        and verb[-2] in "aeiou"
        and verb[-3] not in "aeiou"
        and _syllables(verb) == 1
    ):
        return verb + verb[-1] + "ed"
    return verb + "ed"


@dataclass(frozen=True)
class VerbLexicon:
    verbs: frozenset[str]
    irregular_past: dict[str, str] = field(default_factory=dict)

    @classmethod
    def load(cls, path: str | Path | None = None) -> "VerbLexicon":
        """Read a ``verb[,past]`` word list; the bundled list by default."""
        if path is None:
            text = resources.files(__package__).joinpath("data/verbs.txt").read_text("utf-8")
        else:
            text = Path(path).read_text("utf-8")
        verbs = set()
        past = dict(IRREGULAR_PAST)
        for raw in text.splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            verb, _, form = line.partition(",")
            verb = verb.strip().lower()
            verbs.add(verb)
            if form.strip():
                past[verb] = form.strip().lower()
        return cls(frozenset(verbs), past)

    @cached_property
    def _inflections(self) -> dict[str, str]:
        table = {}
        for verb in sorted(self.verbs):
            table.setdefault(self.past_tense(verb), verb)
            table.setdefault(self.past_participle(verb), verb)
        return table

    def past_tense(self, verb: str) -> str:
        return self.irregular_past.get(verb) or IRREGULAR_PAST.get(verb) or regular_past(verb)

    def past_participle(self, verb: str) -> str:
        return IRREGULAR_PARTICIPLE.get(verb) or self.past_tense(verb)

    def knows(self, word: str) -> bool:
        """Listed verb, or an unlisted -ize/-ify coinage (``tokenize``, ``jsonify``)."""
        if word in self.verbs:
            return True
        return len(word) >= 6 and word.endswith(VERB_SUFFIXES) and word not in NOUN_AMBIGUOUS

    def is_verb(self, word: str) -> bool:
        """Base form or third-person singular of a known verb."""
        return self.base_form(word, participles=False) is not None

    def is_strong_verb(self, word: str) -> bool:
        """A base-form verb that is unlikely to head a noun compound."""
        return self.knows(word) and word not in NOUN_AMBIGUOUS and word not in AUXILIARIES

    def is_participle(self, word: str) -> bool:
        """Past participle or -ing form of a known verb."""
        return not self.knows(word) and self.base_form(word, participles=True) is not None

    def base_form(self, word: str, participles: bool = True) -> str | None:
        if self.knows(word):
            return word
        if word in THIRD_PERSON_IRREGULAR:
            return THIRD_PERSON_IRREGULAR[word]
        candidates = []
        if word.endswith("ies"):
            candidates.append(word[:-3] + "y")
        if word.endswith("es"):
            candidates.append(word[:-2])
        if word.endswith("s"):
            candidates.append(word[:-1])
        for stem in candidates:
            if self.knows(stem):
                return stem
        if not participles:
            return None
        if word in self._inflections:
            return self._inflections[word]
        for stem in (word[:-1], word[:-3] + "y"):
            if word.endswith("ed") and stem.endswith(VERB_SUFFIXES) and self.knows(stem):
                return stem
        if word.endswith("ing") and len(word) > 4:
            stem = word[:-3]
            for guess in (stem, stem + "e", stem[:-1]):
                if self.knows(guess):
                    return guess
        return None


@lru_cache(maxsize=1)
def default_lexicon() -> VerbLexicon:
    return VerbLexicon.load()


def past_tense(verb: str, lexicon: VerbLexicon | None = None) -> str:
    return (lexicon or default_lexicon()).past_tense(verb)
