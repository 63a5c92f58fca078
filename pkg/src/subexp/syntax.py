"""Concrete syntax: parser and printer.

Formulas, loosest to tightest::

    F | G        par (interpretation output only, left)
    F \\ G        under (right), F / G over (left); never mixed unparenthesised
    F + G        plus (left)
    F & G        with (left)
    F * G        tensor (left)
    ![i]F ?[i]F  exponentials
    a 1 0 (F)

Contexts are ``()``, a formula, a hole ``{LR..}``, or a strictly binary
``(C, C)``.  A sequent is ``C |- F`` (the succedent may be left out in LNS
components), and an LNS chains components with ``//[i]`` (finished) or
``//^[i]`` (unfinished); a bare ``//`` uses the default label.

Unicode glyphs are accepted as aliases on input: ⊗ ⊕ ⊸ ⟜ ⅋ ⊢ ⤳.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .context import EMPTY, Context, Empty, Hole, Leaf, Node
from .core import (ONE, ZERO, Atom, Bang, Formula, One, Over, Par, Plus,
                   Quest, Tensor, Under, With, Zero)
from .lnscalc import DEFAULT_LABEL, LNS, Component, Link
from .sellcalc import Sequent


class ParseError(ValueError):
    def __init__(self, message, text="", offset=0):
        self.message = message
        self.offset = offset
        self.line = text.count("\n", 0, offset) + 1
        self.column = offset - (text.rfind("\n", 0, offset) + 1) + 1
        super().__init__(f"{self.line}:{self.column}: {message}")


ALIASES = {"⊗": "*", "⊕": "+", "⊸": "\\", "⟜": "/", "⅋": "|", "⊢": "|-",
           "⤳̂": "//^", "⤳": "//"}

_TOKEN = re.compile(r"""
    (?P<ws>\s+)
  | (?P<hole>\{[LR]*\})
  | (?P<sym>\|-|//\^|//|⤳\u0302|[⤳⊢⊗⊕⊸⟜⅋!?()\[\],*&+\\/|])
  | (?P<word>[A-Za-z0-9_']+)
""", re.VERBOSE)


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    offset: int


def tokenize(text: str) -> list:
    out, pos = [], 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", text, pos)
        if m.lastgroup != "ws":
            out.append(Token(m.lastgroup, ALIASES.get(m.group(), m.group()), pos))
        pos = m.end()
    out.append(Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.toks, self.text = tokenize(text), text
        self.i = 0

    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k=1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def error(self, message, tok=None):
        tok = tok or self.tok
        return ParseError(message, self.text, tok.offset)

    def expect(self, text):
        if self.tok.text != text:
            found = self.tok.text or "end of input"
            raise self.error(f"expected {text!r}, found {found!r}")
        self.i += 1

    def label(self) -> str:
        self.expect("[")
        if self.tok.kind != "word":
            raise self.error("expected a label")
        lab = self.tok.text
        self.i += 1
        self.expect("]")
        return lab

    # formulas
    def formula(self) -> Formula:
        f = self.residual()
        while self.tok.text == "|":
            self.i += 1
            f = Par(f, self.residual())
        return f

    def residual(self) -> Formula:
        operands = [self.plus()]
        ops = []
        while self.tok.text in ("\\", "/"):
            ops.append(self.tok)
            self.i += 1
            operands.append(self.plus())
        if not ops:
            return operands[0]
        if len({t.text for t in ops}) > 1:
            raise self.error("mixing '\\' and '/' needs parentheses", ops[-1])
        if ops[0].text == "\\":
            f = operands[-1]
            for g in reversed(operands[:-1]):
                f = Under(g, f)
            return f
        f = operands[0]
        for g in operands[1:]:
            f = Over(f, g)
        return f

    def _left_chain(self, sym, build, sub):
        f = sub()
        while self.tok.text == sym:
            self.i += 1
            f = build(f, sub())
        return f

    def plus(self):
        return self._left_chain("+", Plus, self.with_)

    def with_(self):
        return self._left_chain("&", With, self.tensor)

    def tensor(self):
        return self._left_chain("*", Tensor, self.unary)

    def unary(self) -> Formula:
        t = self.tok
        if t.text in ("!", "?"):
            self.i += 1
            lab = self.label()
            body = self.unary()
            return Bang(lab, body) if t.text == "!" else Quest(lab, body)
        if t.text == "(":
            self.i += 1
            f = self.formula()
            self.expect(")")
            return f
        if t.kind == "word":
            self.i += 1
            if t.text == "1":
                return ONE
            if t.text == "0":
                return ZERO
            if not (t.text[0].isalpha() or t.text[0] == "_"):
                raise self.error(f"atoms start with a letter: {t.text!r}", t)
            return Atom(t.text)
        raise self.error(f"expected a formula, found {t.text or 'end of input'!r}")

    # contexts
    def context(self) -> Context:
        t = self.tok
        if t.text == "(" and self.peek().text == ")":
            self.i += 2
            return EMPTY
        if t.kind == "hole":
            self.i += 1
            return Hole(t.text[1:-1])
        start = self.i
        try:
            f = self.formula()
            if self.tok.text in (",", ")", "|-", "//", "//^", ""):
                return Leaf(f)
            raise self.error(f"unexpected {self.tok.text!r} in context")
        except ParseError as formula_error:
            if t.text != "(":
                raise
            self.i = start
            try:
                return self.node()
            except ParseError as node_error:
                raise max(formula_error, node_error, key=lambda e: e.offset)

    def node(self) -> Context:
        self.expect("(")
        left = self.context()
        self.expect(",")
        right = self.context()
        if self.tok.text == ",":
            raise self.error("commas are binary: write (a, (b, c)) or ((a, b), c)")
        self.expect(")")
        if isinstance(left, Empty) or isinstance(right, Empty):
            raise self.error("() cannot appear inside a comma")
        return Node(left, right)

    # sequents
    def component(self) -> Component:
        if self.tok.text == "|-":
            ctx = EMPTY
        else:
            ctx = self.context()
        self.expect("|-")
        if self.tok.text in ("//", "//^", ""):
            return Component(ctx, None)
        return Component(ctx, self.formula())

    def lns(self) -> LNS:
        comps, links = [self.component()], []
        while self.tok.text in ("//", "//^"):
            finished = self.tok.text == "//"
            self.i += 1
            lab = self.label() if self.tok.text == "[" else DEFAULT_LABEL
            links.append(Link(lab, finished))
            comps.append(self.component())
        return LNS(tuple(comps), tuple(links))

    def done(self, value):
        if self.tok.kind != "end":
            raise self.error(f"unexpected {self.tok.text!r} after input")
        return value


def parse_formula(text: str) -> Formula:
    p = _Parser(text)
    return p.done(p.formula())


def parse_context(text: str) -> Context:
    p = _Parser(text)
    return p.done(p.context())


def parse_sequent(text: str) -> Sequent:
    p = _Parser(text)
    c = p.done(p.component())
    if c.succedent is None:
        raise ParseError("a sequent needs a succedent", text, len(text))
    return Sequent(c.antecedent, c.succedent)


def parse_lns(text: str) -> LNS:
    p = _Parser(text)
    return p.done(p.lns())


# ---------------------------------------------------------------- printer

_LEVEL = {Par: 0, Under: 1, Over: 1, Plus: 2, With: 3, Tensor: 4, Bang: 5, Quest: 5}
_SYMBOL = {Par: "|", Under: "\\", Over: "/", Plus: "+", With: "&", Tensor: "*"}


def _level(f) -> int:
    return _LEVEL.get(type(f), 6)


def show_formula(f: Formula) -> str:
    def wrap(g, paren):
        s = show_formula(g)
        return f"({s})" if paren else s

    if isinstance(f, Atom):
        return f.name
    if isinstance(f, One):
        return "1"
    if isinstance(f, Zero):
        return "0"
    if isinstance(f, (Bang, Quest)):
        mark = "!" if isinstance(f, Bang) else "?"
        return f"{mark}[{f.label}]" + wrap(f.body, _level(f.body) < 5)
    lv = _level(f)
    ll, rl = _level(f.left), _level(f.right)
    if isinstance(f, Under):
        lp = ll <= 1
        rp = rl < 1 or isinstance(f.right, Over)
    elif isinstance(f, Over):
        lp = ll < 1 or isinstance(f.left, Under)
        rp = rl <= 1
    else:
        lp, rp = ll < lv, rl <= lv
    return f"{wrap(f.left, lp)} {_SYMBOL[type(f)]} {wrap(f.right, rp)}"


def show_context(ctx: Context) -> str:
    if isinstance(ctx, Empty):
        return "()"
    if isinstance(ctx, Hole):
        return "{" + ctx.id + "}"
    if isinstance(ctx, Leaf):
        return show_formula(ctx.formula)
    return f"({show_context(ctx.left)}, {show_context(ctx.right)})"


def _show_component(ctx, succ) -> str:
    head = show_context(ctx) + " |-"
    return head if succ is None else f"{head} {show_formula(succ)}"


def show(value) -> str:
    """Print a formula, context, sequent, component or LNS."""
    if isinstance(value, Sequent):
        return _show_component(value.antecedent, value.succedent)
    if isinstance(value, Component):
        return _show_component(value.antecedent, value.succedent)
    if isinstance(value, LNS):
        parts = [show(value.components[0])]
        for link, comp in zip(value.links, value.components[1:]):
            op = "//" if link.finished else "//^"
            parts.append(f"{op}[{link.label}]")
            parts.append(show(comp))
        return " ".join(parts)
    if isinstance(value, (Empty, Leaf, Hole, Node)):
        return show_context(value)
    return show_formula(value)
