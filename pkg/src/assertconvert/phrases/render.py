"""Expression-to-English rules, one per AST node kind."""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..java import nodes as n
from ..java.symbols import EMPTY, UNKNOWN, SymbolTable, erase_generics
from .lexicon import ADJECTIVES, AUXILIARIES, FUNCTION_WORDS, VerbLexicon, default_lexicon
from .words import readability_pass, split_camel_case


@dataclass(frozen=True)
class Phrase:
    text: str
    rule: str
    # every rule fired while building this phrase, outermost first
    trace: tuple[str, ...] = ()

    def __str__(self) -> str:
        return self.text


BINARY_OPERATORS = {
    "+": "plus",
    "-": "minus",
    "*": "times",
    "/": "divided by",
    "%": "modulo",
    "==": "equals",
    "!=": "does not equal",
    "<": "is less than",
    ">": "is greater than",
    "<=": "is less than or equal to",
    ">=": "is greater than or equal to",
    "&&": "and",
    "||": "or",
    "&": "bitwise and",
    "|": "bitwise or",
    "^": "xor",
    "<<": "shifted left by",
    ">>": "shifted right by",
    ">>>": "unsigned shifted right by",
}

ASSIGN_OPERATORS = {
    "=": "equals",
    "+=": "plus equals",
    "-=": "minus equals",
    "*=": "times equals",
    "/=": "divided by equals",
    "%=": "modulo equals",
    "&=": "bitwise and equals",
    "|=": "bitwise or equals",
    "^=": "xor equals",
    "<<=": "shifted left by equals",
    ">>=": "shifted right by equals",
    ">>>=": "unsigned shifted right by equals",
}

NUMERIC_PRIMITIVES = frozenset({"int", "double", "float", "long"})


@dataclass(frozen=True)
class RenderContext:
    symbols: SymbolTable = EMPTY
    lexicon: VerbLexicon | None = None
    # keep string literals as quoted text instead of the word "string"
    quote_strings: bool = False
    # source offset of the enclosing assertion, for scoped type lookup
    at: int | None = None

    @property
    def verbs(self) -> VerbLexicon:
        return self.lexicon or default_lexicon()


def type_words(type_name: str) -> list[str]:
    """``Map<String, Foo>[]`` -> ``['map', 'array']``."""
    erased = erase_generics(type_name)
    dims = erased.count("[]")
    base = erased.replace("[]", "").split(".")[-1]
    return split_camel_case(base) + ["array"] * dims


def type_phrase(type_name: str) -> str:
    return " ".join(type_words(type_name))


def _join(*parts: str) -> str:
    return " ".join(p for p in parts if p)


def _strip_number(text: str) -> str:
    text = text.replace("_", "")
    lower = text.lower()
    if lower.endswith("l"):
        return text[:-1]
    if lower[-1:] in ("d", "f") and (not lower.startswith("0x") or "p" in lower):
        return text[:-1]
    return text


def _dotted_words(node: n.Expr) -> list[str] | None:
    if isinstance(node, n.Name):
        return split_camel_case(node.identifier)
    if isinstance(node, n.FieldAccess):
        head = _dotted_words(node.scope)
        return None if head is None else head + split_camel_case(node.field_name)
    if isinstance(node, n.TypeExpr):
        return type_words(node.type_name)
    return None


def render_expr(
    node: n.Expr,
    symbols: SymbolTable = EMPTY,
    *,
    lexicon: VerbLexicon | None = None,
    quote_strings: bool = False,
    at: int | None = None,
) -> Phrase:
    ctx = RenderContext(symbols, lexicon, quote_strings, at)
    phrase = _render(node, ctx)
    return replace(phrase, text=readability_pass(phrase.text))


def _render(node: n.Expr, ctx: RenderContext) -> Phrase:
    handler = _HANDLERS.get(type(node))
    if handler is None:
        raise TypeError(f"unsupported node {type(node).__name__}")
    return handler(node, ctx)


def _phrase(text: str, rule: str, *subs: Phrase) -> Phrase:
    trace = [rule]
    for sub in subs:
        trace.extend(sub.trace)
    return Phrase(text.lower(), rule, tuple(trace))


# -- literals --------------------------------------------------------------


def _string(node: n.StringLiteral, ctx: RenderContext) -> Phrase:
    if ctx.quote_strings:
        return _phrase(f'"{node.value}"', "StringLiteral.quoted")
    return _phrase("string", "StringLiteral")


def _char(node: n.CharLiteral, ctx):
    return _phrase(node.value, "CharLiteral")


def _number(node, ctx):
    return _phrase(_strip_number(node.text), type(node).__name__)


def _boolean(node: n.BooleanLiteral, ctx):
    return _phrase("true" if node.value else "false", "BooleanLiteral")


def _null(node, ctx):
    return _phrase("null", "NullLiteral")


# -- names and types -------------------------------------------------------


def _name(node: n.Name, ctx: RenderContext) -> Phrase:
    name_words = split_camel_case(node.identifier)
    name_text = " ".join(name_words)
    declared = ctx.symbols.type_of(node.identifier, ctx.at)
    if declared == UNKNOWN:
        return _phrase(name_text, "Name.untyped")
    words = type_words(declared)
    type_text = " ".join(words)
    if type_text == "boolean":
        return _phrase(name_text, "Name.boolean")
    if type_text in NUMERIC_PRIMITIVES:
        return _phrase(f"{type_text} {name_text}", "Name.numeric")
    if len(name_words) > len(words) and _contains_run(name_words, words):
        return _phrase(name_text, "Name.descriptive")
    return _phrase(type_text, "Name.type")


def _contains_run(haystack: list[str], needle: list[str]) -> bool:
    k = len(needle)
    return k > 0 and any(haystack[i : i + k] == needle for i in range(len(haystack) - k + 1))


def _type_expr(node: n.TypeExpr, ctx):
    if "boolean" in node.type_name:
        return _phrase("", "TypeExpr.boolean")
    return _phrase("type " + type_phrase(node.type_name), "TypeExpr")


def _class_expr(node: n.ClassExpr, ctx):
    return _phrase(type_phrase(node.type_name) + " class", "ClassExpr")


def _this(node: n.ThisExpr, ctx):
    if node.class_scope:
        return _phrase(type_phrase(node.class_scope) + " this", "ThisExpr.scoped")
    return _phrase("this", "ThisExpr")


def _super(node: n.SuperExpr, ctx):
    if node.class_scope:
        return _phrase("super of " + type_phrase(node.class_scope), "SuperExpr.scoped")
    return _phrase("super", "SuperExpr")


# -- compound expressions --------------------------------------------------


def _array_access(node: n.ArrayAccess, ctx):
    index = _render(node.index, ctx)
    name = _render(node.name, ctx)
    return _phrase(f"index {index.text} of {name.text}", "ArrayAccess", index, name)


def _array_creation(node: n.ArrayCreation, ctx):
    text = f"new {type_phrase(node.elem_type)} array is created"
    subs = []
    if node.initializer is not None:
        init = _render(node.initializer, ctx)
        subs.append(init)
        text = _join(text, init.text)
    return _phrase(text, "ArrayCreation", *subs)


def _array_init(node: n.ArrayInitializer, ctx):
    values = [_render(v, ctx) for v in node.values]
    if not values:
        return _phrase("initialized empty", "ArrayInitializer")
    return _phrase("initialized with " + " and ".join(v.text for v in values), "ArrayInitializer", *values)


def _assign(node: n.Assign, ctx):
    target = _render(node.target, ctx)
    value = _render(node.value, ctx)
    return _phrase(_join(target.text, ASSIGN_OPERATORS[node.op], value.text), "Assign", target, value)


def _binary(node: n.Binary, ctx):
    left = _render(node.left, ctx)
    right = _render(node.right, ctx)
    return _phrase(_join(left.text, BINARY_OPERATORS[node.op], right.text), "Binary", left, right)


def _cast(node: n.Cast, ctx):
    inner = _render(node.inner, ctx)
    return _phrase(f"{inner.text} as {type_phrase(node.type)}", "Cast", inner)


def _conditional(node: n.Conditional, ctx):
    cond = _render(node.cond, ctx)
    then = _render(node.then, ctx)
    other = _render(node.otherwise, ctx)
    return _phrase(
        f"{then.text} if {cond.text} otherwise {other.text}", "Conditional", cond, then, other
    )


def _enclosed(node: n.Enclosed, ctx):
    if node.inner is None:
        return _phrase("()", "Enclosed.empty")
    inner = _render(node.inner, ctx)
    return _phrase(inner.text, "Enclosed", inner)


def _field_access(node: n.FieldAccess, ctx):
    scope = _render(node.scope, ctx)
    field_text = " ".join(split_camel_case(node.field_name))
    return _phrase(f"{field_text} of {scope.text}", "FieldAccess", scope)


def _instance_of(node: n.InstanceOf, ctx):
    expr = _render(node.expr, ctx)
    return _phrase(f"{expr.text} is class {type_phrase(node.type_name)}", "InstanceOf", expr)


def _lambda(node: n.Lambda, ctx):
    names = [" ".join(split_camel_case(p.split()[-1])) if p.split() else "" for p in node.params]
    body = _render(node.body, ctx)
    verb = "become" if len(names) > 1 else "becomes"
    params = " and ".join(names) if names else "nothing"
    return _phrase(f"{params} {verb} {body.text}", "Lambda", body)


def _method_reference(node: n.MethodReference, ctx):
    words = _dotted_words(node.scope)
    if words is not None:
        scope_text = " ".join(words)
        subs = ()
    else:
        scope = _render(node.scope, ctx)
        scope_text, subs = scope.text, (scope,)
    if node.identifier == "new":
        return _phrase(f"new {scope_text} is created", "MethodReference.new", *subs)
    ident = " ".join(split_camel_case(node.identifier))
    return _phrase(f"{scope_text} {ident}", "MethodReference", *subs)


def _object_creation(node: n.ObjectCreation, ctx):
    args = [_render(a, ctx) for a in node.args]
    text = "new " + type_phrase(node.type_name)
    if args:
        text += " with " + " and ".join(a.text for a in args)
    return _phrase(text, "ObjectCreation", *args)


def _unary(node: n.Unary, ctx):
    operand = _render(node.operand, ctx)
    op = node.op
    if op == "++":
        text = f"{operand.text} plus 1"
    elif op == "--":
        text = f"{operand.text} minus 1"
    elif op == "!":
        text = f"not {operand.text}"
    elif op == "~":
        text = f"bitwise complement of {operand.text}"
    elif op == "-" and isinstance(node.operand, n.NUMERIC_LITERAL_TYPES):
        text = f"-{operand.text}"
    elif op == "-":
        text = f"negative {operand.text}"
    else:
        text = f"positive {operand.text}"
    return _phrase(text, "Unary", operand)


def _variable_declaration(node: n.VariableDeclaration, ctx):
    parts = []
    subs = []
    for var in node.vars:
        type_text = type_phrase(var.type)
        name_text = " ".join(split_camel_case(var.name))
        if var.initializer is not None:
            init = _render(var.initializer, ctx)
            subs.append(init)
            parts.append(f"{type_text} equals {init.text}")
        elif type_text == name_text:
            parts.append(type_text)
        else:
            parts.append(f"{type_text} {name_text}")
    return _phrase(" and ".join(parts), "VariableDeclaration", *subs)


# -- method calls ----------------------------------------------------------


def _is_noun(word: str, lexicon: VerbLexicon) -> bool:
    return (
        word.isalpha()
        and word not in FUNCTION_WORDS
        and word not in ADJECTIVES
        and not lexicon.is_strong_verb(word)
        and not lexicon.is_participle(word)
    )


def classify_method_name(
    words: list[str],
    has_caller: bool,
    lexicon: VerbLexicon | None = None,
    caller_words: list[str] | None = None,
) -> int | str:
    """Pick the first matching method-name case (1-9) or ``"other"``.

    Case 9 (a caller phrase starting with "with") is reported in place of
    5, 7 or 8 when ``caller_words`` is given.
    """
    lexicon = lexicon or default_lexicon()
    caller_words = caller_words or []
    with_caller = bool(caller_words) and caller_words[0] == "with"
    if not words:
        return "other"
    if words[0] == "get" and len(words) > 1:
        return 1
    if len(words) == 1 and (lexicon.is_verb(words[0]) or words[0] in caller_words):
        return 2
    if words == ["to", "string"]:
        return 3
    verb = words[0]
    if lexicon.is_strong_verb(verb) and verb not in AUXILIARIES:
        if len(words) >= 2 and _is_noun(words[1], lexicon):
            if not has_caller:
                return 4
            return 9 if with_caller else 5
        if len(words) >= 3 and words[1] in ADJECTIVES and _is_noun(words[2], lexicon):
            if not has_caller:
                return 6
            return 9 if with_caller else 7
    if verb == "is" and len(words) >= 2 and lexicon.is_participle(words[1]):
        return 9 if with_caller else 8
    return "other"


def _method_call(node: n.MethodCall, ctx: RenderContext) -> Phrase:
    words = split_camel_case(node.name)
    lexicon = ctx.verbs
    caller = _render(node.scope, ctx) if node.scope is not None else None
    caller_text = caller.text if caller else ""
    caller_words = caller_text.split()
    subs = [caller] if caller else []
    case = classify_method_name(words, caller is not None, lexicon, caller_words)
    if case == 9:
        # same layout as 5/7/8, only the "by" is dropped
        base = 8 if words[0] == "is" else (5 if _is_noun(words[1], lexicon) else 7)
        text = _passive(words, base, lexicon, caller_text, by="")
        return _phrase(text, "MethodCall.case9", *subs)

    if case == 1:
        text = _join(caller_text, " ".join(words[1:])) if caller else " ".join(words)
    elif case == 2:
        args = []
        for arg in node.args:
            phrase = _render(arg, ctx)
            subs.append(phrase)
            args.append(f"({phrase.text})" if isinstance(arg, n.MethodCall) else phrase.text)
        text = _join(caller_text, words[0], " and ".join(args))
    elif case == 3:
        text = f"{caller_text or 'this'} as a string"
    elif case in (4, 5, 6, 7, 8):
        text = _passive(words, case, lexicon, caller_text, by="by")
    else:
        text = _join(caller_text, " ".join(words))
    return _phrase(text, f"MethodCall.case{case}", *subs)


def _passive(words: list[str], case: int, lexicon: VerbLexicon, caller: str, by: str) -> str:
    if case == 8:
        return _join(caller, "is", " ".join(words[1:]))
    verb = lexicon.past_tense(words[0])
    if case in (4, 5):
        subject, rest = words[1], words[2:]
    else:
        subject, rest = f"{words[1]} {words[2]}", words[3:]
    text = _join(subject, "is", verb, " ".join(rest))
    if caller:
        text = _join(text, by, caller)
    return text


_HANDLERS = {
    n.ArrayAccess: _array_access,
    n.ArrayCreation: _array_creation,
    n.ArrayInitializer: _array_init,
    n.Assign: _assign,
    n.Binary: _binary,
    n.BooleanLiteral: _boolean,
    n.Cast: _cast,
    n.CharLiteral: _char,
    n.ClassExpr: _class_expr,
    n.Conditional: _conditional,
    n.DoubleLiteral: _number,
    n.Enclosed: _enclosed,
    n.FieldAccess: _field_access,
    n.InstanceOf: _instance_of,
    n.IntegerLiteral: _number,
    n.Lambda: _lambda,
    n.LongLiteral: _number,
    n.MethodCall: _method_call,
    n.MethodReference: _method_reference,
    n.Name: _name,
    n.NullLiteral: _null,
    n.ObjectCreation: _object_creation,
    n.StringLiteral: _string,
    n.SuperExpr: _super,
    n.ThisExpr: _this,
    n.TypeExpr: _type_expr,
    n.Unary: _unary,
    n.VariableDeclaration: _variable_declaration,
}
