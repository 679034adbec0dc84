"""Independent reference implementations used to cross-check the package."""

import random
import re

ASSERT_NAMES = (
    "assertTrue assertFalse assertNull assertNotNull assertEquals "
    "assertNotEquals assertArrayEquals assertSame assertNotSame assertThat"
).split()

JAVA_KEYWORDS = set(
    "abstract assert boolean break byte case catch char class const continue default do "
    "double else enum extends final finally float for goto if implements import instanceof "
    "int interface long native new package private protected public return short static "
    "strictfp super switch synchronized this throw throws transient try void volatile while "
    "true false null var".split()
)


def mask(source):
    """Blank out comments and string/char literal contents, character by
    character, keeping offsets and newlines."""
    out = list(source)
    i, n = 0, len(source)
    while i < n:
        if source.startswith("//", i):
            while i < n and source[i] != "\n":
                out[i] = " "
                i += 1
        elif source.startswith("/*", i):
            j = source.find("*/", i + 2)
            j = n if j < 0 else j + 2
            for k in range(i, j):
                if out[k] != "\n":
                    out[k] = " "
            i = j
        elif source[i] in "\"'":
            quote = source[i]
            out[i] = " "
            i += 1
            while i < n and source[i] != quote and source[i] != "\n":
                if source[i] == "\\":
                    out[i] = " "
                    i += 1
                out[i] = " "
                i += 1
            if i < n and source[i] == quote:
                out[i] = " "
                i += 1
        else:
            i += 1
    return "".join(out)


_WORD = re.compile(r"[A-Za-z_$][\w$]*")


def brute_force_scan(source):
    """(qualifier start offset, method name) for every assertion call."""
    text = mask(source)
    hits = []
    for name in ASSERT_NAMES:
        for m in re.finditer(r"(?<![\w$])" + name + r"(?![\w$])\s*\(", text):
            start = m.start()
            # previous word, to skip helper declarations like `void assertTrue(`
            k = start - 1
            while k >= 0 and text[k].isspace():
                k -= 1
            end_prev = k + 1
            while k >= 0 and (text[k].isalnum() or text[k] in "_$"):
                k -= 1
            prev_word = text[k + 1 : end_prev]
            if prev_word and (prev_word == "void" or prev_word not in JAVA_KEYWORDS):
                continue
            # walk back over `Qualifier .` pairs
            first = start
            while True:
                k = first - 1
                while k >= 0 and text[k].isspace():
                    k -= 1
                if k < 0 or text[k] != ".":
                    break
                k -= 1
                while k >= 0 and text[k].isspace():
                    k -= 1
                word_end = k + 1
                while k >= 0 and (text[k].isalnum() or text[k] in "_$"):
                    k -= 1
                word = text[k + 1 : word_end]
                if not _WORD.fullmatch(word) or word in JAVA_KEYWORDS:
                    break
                first = k + 1
            hits.append((first, name))
    return sorted(hits)


_FRAGMENTS = [
    "assertTrue(flag);",
    "Assert.assertEquals(a, b);",
    "org.junit.Assert.assertNull( x );",
    "assertThat(v, is(2));",
    "assertNotNull (obj.get(\"k\"));",
    "assertEquals(\"msg (with parens\", f(g(1)), 2);",
    'String s = "assertTrue(x) inside a string";',
    "// assertFalse(commented);",
    "/* assertEquals(1, 2); */",
    "/* multi\n line assertSame(a, b); */",
    "char c = '\"';",
    "char q = '\\'';",
    'String t = "escaped \\" assertNull(y) quote";',
    "void assertEquals(int a, int b) { }",
    "private static boolean assertThat(Object o) { return true; }",
    "myassertTrue(x);",
    "assertTrueish(x);",
    "helper.assertArrayEquals(arr1, arr2);",
    "Assertions.assertNotEquals(1, 2);",
    "assertSame(a,\n    b);",
    "assertNotSame(a, b); // assertTrue(never)",
    "int x = compute(1) + 2;",
    "Runnable r = () -> assertTrue(done);",
    "list.forEach(Assert::assertNotNull);",
    "return assertFalse(z);",
]


def generate_files(count=50, seed=20180527):
    rng = random.Random(seed)
    files = []
    for _ in range(count):
        body = [rng.choice(_FRAGMENTS) for _ in range(rng.randint(1, 8))]
        files.append("class GenTest {\n  void t() {\n    " + "\n    ".join(body) + "\n  }\n}\n")
    return files


PAST_TENSE_FILE = "past_tense_oracle.txt"
