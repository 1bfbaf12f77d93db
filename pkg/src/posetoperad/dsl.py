"""Parser and printer for poset expressions.

Grammar (EBNF)::

    expr      := term ('|' term)*
    term      := factor ('*' factor)*
    factor    := literal | literal '(' expr (',' expr)* ')' | '(' expr ')'
    literal   := 'C' nat | 'A' nat | '{' relations '}' | ident
    relations := relitem (',' relitem)* | <empty>
    relitem   := ident (('<'|'>') ident)*

'|' is disjoint union (the unicode square-cup is accepted as an alias) and
'*' is the ordinal sum; '*' binds tighter, both associate left.  Inside a
brace literal 'a>b' normalizes to the cover (b, a) before closure.
Lexicographic application `lit(e1, ..., ek)` binds arguments to the
literal's labels in first-appearance order; that order is also the slot
order of the resolved poset.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ArityError, ExprSyntaxError, UnknownName
from .poset import antichain, chain, construct_poset, lex_sum


@dataclass(frozen=True)
class ChainLit:
    n: int


@dataclass(frozen=True)
class AntichainLit:
    n: int


@dataclass(frozen=True)
class HasseLit:
    labels: tuple
    covers: tuple


@dataclass(frozen=True)
class Union:
    left: object
    right: object


@dataclass(frozen=True)
class OrdinalSum:
    left: object
    right: object


@dataclass(frozen=True)
class LexApply:
    outer: object
    args: tuple


@dataclass(frozen=True)
class Var:
    name: str


_TOKEN_RE = re.compile(
    r"(?P<ident>[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<nat>[0-9]+)"
    r"|(?P<punct>[(){}<>,*|]|⊔)"
    r"|(?P<space>[ \t]+)"
    r"|(?P<newline>\n)"
)


@dataclass(frozen=True)
class _Tok:
    kind: str
    text: str
    line: int
    col: int


def _tokenize(text):
    toks = []
    line, col, pos = 1, 1, 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ExprSyntaxError(line, col, "a token", text[pos])
        pos = m.end()
        if m.lastgroup == "newline":
            line += 1
            col = 1
            continue
        if m.lastgroup == "space":
            col += len(m.group())
            continue
        tok_text = m.group()
        kind = m.lastgroup
        if kind == "punct" and tok_text == "⊔":
            tok_text = "|"
        toks.append(_Tok(kind, tok_text, line, col))
        col += len(m.group())
    toks.append(_Tok("eof", "", line, col))
    return toks


class _Parser:
    def __init__(self, toks):
        self.toks = toks
        self.pos = 0

    def peek(self):
        return self.toks[self.pos]

    def advance(self):
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, text, what=None):
        t = self.peek()
        if t.text != text:
            raise ExprSyntaxError(t.line, t.col, what or repr(text),
                                  t.text or "end of input")
        return self.advance()

    def parse_expr(self):
        node = self.parse_term()
        while self.peek().text == "|":
            self.advance()
            node = Union(node, self.parse_term())
        return node

    def parse_term(self):
        node = self.parse_factor()
        while self.peek().text == "*":
            self.advance()
            node = OrdinalSum(node, self.parse_factor())
        return node

    def parse_factor(self):
        t = self.peek()
        if t.text == "(":
            self.advance()
            node = self.parse_expr()
            self.expect(")")
            return node
        lit = self.parse_literal()
        if self.peek().text == "(":
            open_tok = self.advance()
            args = [self.parse_expr()]
            while self.peek().text == ",":
                self.advance()
                args.append(self.parse_expr())
            self.expect(")")
            slots = _literal_arity(lit)
            if slots is not None and slots != len(args):
                raise ArityError(open_tok.line, open_tok.col,
                                 f"literal has {slots} slots, "
                                 f"got {len(args)} arguments")
            return LexApply(lit, tuple(args))
        return lit

    def parse_literal(self):
        t = self.peek()
        if t.kind == "ident":
            self.advance()
            m = re.fullmatch(r"([CA])([0-9]+)", t.text)
            if m:
                n = int(m.group(2))
                return ChainLit(n) if m.group(1) == "C" else AntichainLit(n)
            return Var(t.text)
        if t.text == "{":
            return self.parse_hasse()
        raise ExprSyntaxError(t.line, t.col,
                              "a literal (Cn, An, '{...}' or a name)",
                              t.text or "end of input")

    def parse_hasse(self):
        self.expect("{")
        labels = []
        covers = []
        seen = set()

        def note(label):
            if label not in seen:
                seen.add(label)
                labels.append(label)

        if self.peek().text != "}":
            while True:
                first = self.peek()
                if first.kind != "ident":
                    raise ExprSyntaxError(first.line, first.col,
                                          "an element label",
                                          first.text or "end of input")
                self.advance()
                note(first.text)
                prev = first.text
                while self.peek().text in ("<", ">"):
                    op = self.advance()
                    nxt = self.peek()
                    if nxt.kind != "ident":
                        raise ExprSyntaxError(nxt.line, nxt.col,
                                              "an element label",
                                              nxt.text or "end of input")
                    self.advance()
                    note(nxt.text)
                    if op.text == "<":
                        covers.append((prev, nxt.text))
                    else:
                        covers.append((nxt.text, prev))
                    prev = nxt.text
                if self.peek().text != ",":
                    break
                self.advance()
        self.expect("}")
        return HasseLit(tuple(labels), tuple(covers))


def _literal_arity(lit):
    if isinstance(lit, ChainLit) or isinstance(lit, AntichainLit):
        return lit.n
    if isinstance(lit, HasseLit):
        return len(lit.labels)
    return None  # Var: unknown until resolution


def parse_expr(text):
    parser = _Parser(_tokenize(text))
    node = parser.parse_expr()
    tail = parser.peek()
    if tail.kind != "eof":
        raise ExprSyntaxError(tail.line, tail.col, "end of input", tail.text)
    return node


def format_expr(ast):
    """Inverse of parse_expr up to whitespace: parse(format(a)) == a."""
    if isinstance(ast, ChainLit):
        return f"C{ast.n}"
    if isinstance(ast, AntichainLit):
        return f"A{ast.n}"
    if isinstance(ast, HasseLit):
        return _format_hasse(ast)
    if isinstance(ast, Union):
        return f"({format_expr(ast.left)} | {format_expr(ast.right)})"
    if isinstance(ast, OrdinalSum):
        return f"({format_expr(ast.left)} * {format_expr(ast.right)})"
    if isinstance(ast, LexApply):
        args = ", ".join(format_expr(a) for a in ast.args)
        return f"{format_expr(ast.outer)}({args})"
    if isinstance(ast, Var):
        return ast.name
    raise TypeError(f"not an expression node: {ast!r}")


def _format_hasse(lit):
    items = [f"{a}<{b}" for a, b in lit.covers]
    in_covers = {x for pair in lit.covers for x in pair}
    items += [l for l in lit.labels if l not in in_covers]
    # first-appearance order must reproduce the declared label order
    if _appearance_order(items) != list(lit.labels):
        items = list(lit.labels) + [f"{a}<{b}" for a, b in lit.covers]
    return "{" + ",".join(items) + "}"


def _appearance_order(items):
    order = []
    seen = set()
    for item in items:
        for label in re.split(r"[<>]", item):
            if label not in seen:
                seen.add(label)
                order.append(label)
    return order


def resolve(ast):
    """Evaluate an expression node to a Poset."""
    if isinstance(ast, ChainLit):
        return chain(ast.n)
    if isinstance(ast, AntichainLit):
        return antichain(ast.n)
    if isinstance(ast, HasseLit):
        return construct_poset(ast.labels, ast.covers)
    if isinstance(ast, Union):
        return lex_sum(antichain(2), [resolve(ast.left), resolve(ast.right)])
    if isinstance(ast, OrdinalSum):
        return lex_sum(chain(2), [resolve(ast.left), resolve(ast.right)])
    if isinstance(ast, LexApply):
        outer = resolve(ast.outer)
        return lex_sum(outer, [resolve(a) for a in ast.args])
    if isinstance(ast, Var):
        raise UnknownName(ast.name)
    raise TypeError(f"not an expression node: {ast!r}")


def parse_poset(text):
    return resolve(parse_expr(text))
