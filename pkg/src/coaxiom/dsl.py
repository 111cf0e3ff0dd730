"""Concrete syntax for systems and judgments (``.coax`` files).

One statement per rule::

    visit(c,{c}).                              % axiom
    visit(a,{a,b}) <- visit(b,{a,b}).          % rule with premises
    co visit(a,{}).                            % coaxiom

Grammar, whitespace-insensitive, ``%`` starts a comment running to end
of line::

    stmt  := ["co"] term ["<-" term ("," term)*] "."
    term  := IDENT ["(" term ("," term)* ")"] | INT | "inf"
           | "{" [term ("," term)*] "}"
    IDENT := [a-z][A-Za-z0-9_]*
    INT   := "-"? [0-9]+

``inf`` always denotes the infinity term, so no symbol can carry that
name.  ``co`` is only special at the start of a statement, and only
when a term follows it: ``co f(x).`` is a coaxiom, while ``co.``
is an axiom concluding the nullary symbol ``co``.

Parsing stops at the first error and reports its position together with
the token classes that would have been acceptable.
"""

from __future__ import annotations

import string
from dataclasses import dataclass

from .engine import Rule, System, rule_key
from .terms import INF, FinSet, Num, Sym, Term, render_term

__all__ = [
    "ParseError",
    "SourceStatement",
    "SourceSystem",
    "parse_system",
    "parse_source",
    "parse_judgment",
    "parse_judgments",
    "render_system",
    "render_rule",
]


class ParseError(Exception):
    """Syntax error at a 1-based (line, column), with the expected token set."""

    def __init__(self, line: int, column: int, expected: tuple[str, ...], found: str):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        self.found = found
        want = " or ".join(expected)
        super().__init__(f"{line}:{column}: expected {want}, found {found}")


@dataclass(frozen=True)
class SourceStatement:
    """A parsed rule plus where its statement started."""

    rule: Rule
    line: int
    column: int


@dataclass(frozen=True)
class SourceSystem:
    """Parse result that remembers source locations, for tooling."""

    statements: tuple[SourceStatement, ...]

    def system(self) -> System:
        return System(s.rule for s in self.statements)


# ---------------------------------------------------------------------------
# lexer

_IDENT_START = set(string.ascii_lowercase)
_IDENT_CONT = set(string.ascii_letters + string.digits + "_")
_PUNCT = {"(": "(", ")": ")", "{": "{", "}": "}", ",": ",", ".": "."}


@dataclass(frozen=True)
class _Tok:
    kind: str  # IDENT INT ( ) { } , . <- EOF
    text: str
    line: int
    column: int


def _lex(text: str) -> list[_Tok]:
    toks: list[_Tok] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
        elif c in " \t\r":
            i += 1
            col += 1
        elif c == "%":
            while i < n and text[i] != "\n":
                i += 1
        elif c in _PUNCT:
            toks.append(_Tok(_PUNCT[c], c, line, col))
            i += 1
            col += 1
        elif c == "<" and i + 1 < n and text[i + 1] == "-":
            toks.append(_Tok("<-", "<-", line, col))
            i += 2
            col += 2
        elif c.isdigit() or (c == "-" and i + 1 < n and text[i + 1].isdigit()):
            start = i
            startcol = col
            i += 1
            col += 1
            while i < n and text[i].isdigit():
                i += 1
                col += 1
            toks.append(_Tok("INT", text[start:i], line, startcol))
        elif c in _IDENT_START:
            start = i
            startcol = col
            while i < n and text[i] in _IDENT_CONT:
                i += 1
                col += 1
            toks.append(_Tok("IDENT", text[start:i], line, startcol))
        else:
            raise ParseError(line, col, ("statement", "term"), repr(c))
    toks.append(_Tok("EOF", "", line, col))
    return toks


# ---------------------------------------------------------------------------
# parser

_TERM_START = ("IDENT", "INT", "{")


class _Parser:
    def __init__(self, text: str):
        self.toks = _lex(text)
        self.pos = 0

    def peek(self) -> _Tok:
        return self.toks[self.pos]

    def take(self) -> _Tok:
        t = self.toks[self.pos]
        self.pos += 1
        return t

    def expect(self, kind: str) -> _Tok:
        t = self.peek()
        if t.kind != kind:
            self.fail((kind,))
        return self.take()

    def fail(self, expected: tuple[str, ...]):
        t = self.peek()
        found = t.kind if t.kind != "EOF" else "end of input"
        raise ParseError(t.line, t.column, expected, found)

    def at_term(self) -> bool:
        return self.peek().kind in _TERM_START

    def term(self) -> Term:
        t = self.peek()
        if t.kind == "INT":
            self.take()
            return Num(int(t.text))
        if t.kind == "IDENT":
            self.take()
            if t.text == "inf":
                return INF
            if self.peek().kind == "(":
                self.take()
                args = [self.term()]
                while self.peek().kind == ",":
                    self.take()
                    args.append(self.term())
                self.expect(")")
                return Sym(t.text, tuple(args))
            return Sym(t.text)
        if t.kind == "{":
            self.take()
            elems: list[Term] = []
            if self.peek().kind != "}":
                elems.append(self.term())
                while self.peek().kind == ",":
                    self.take()
                    elems.append(self.term())
            self.expect("}")
            return FinSet(tuple(elems))
        self.fail(("term",))
        raise AssertionError("unreachable")

    def statement(self) -> SourceStatement:
        start = self.peek()
        co = False
        if start.kind == "IDENT" and start.text == "co":
            # Lookahead: "co" is the co marker only when a term follows.
            nxt = self.toks[self.pos + 1]
            if nxt.kind in _TERM_START:
                self.take()
                co = True
        conclusion = self.term()
        premises: list[Term] = []
        if self.peek().kind == "<-":
            self.take()
            premises.append(self.term())
            while self.peek().kind == ",":
                self.take()
                premises.append(self.term())
        self.expect(".")
        return SourceStatement(Rule(conclusion, tuple(premises), co), start.line, start.column)

    def source_system(self) -> SourceSystem:
        stmts: list[SourceStatement] = []
        while self.peek().kind != "EOF":
            stmts.append(self.statement())
        return SourceSystem(tuple(stmts))

    def single_term(self) -> Term:
        t = self.term()
        self.expect("EOF")
        return t

    def term_lines(self) -> tuple[Term, ...]:
        out: list[Term] = []
        while self.peek().kind != "EOF":
            out.append(self.term())
            self.expect(".")
        return tuple(out)


def parse_source(text: str) -> SourceSystem:
    """Parse a whole ``.coax`` document, keeping statement locations."""
    return _Parser(text).source_system()


def parse_system(text: str) -> System:
    """Parse a whole ``.coax`` document into a :class:`System`."""
    return parse_source(text).system()


def parse_judgment(text: str) -> Term:
    """Parse one bare term, e.g. a judgment given on a command line."""
    return _Parser(text).single_term()


def parse_judgments(text: str) -> tuple[Term, ...]:
    """Parse a judgment-set file: one ``.``-terminated term per entry."""
    return _Parser(text).term_lines()


# ---------------------------------------------------------------------------
# rendering

def render_rule(r: Rule) -> str:
    head = ("co " if r.co else "") + render_term(r.conclusion)
    if r.premises:
        head += " <- " + ", ".join(render_term(p) for p in r.premises)
    return head + "."


def render_system(sys: System) -> str:
    """Canonical text: regular rules first, each family in canonical order.

    ``parse_system(render_system(s)) == s`` for every system.
    """
    lines = [render_rule(r) for r in sorted(sys.regular_rules, key=rule_key)]
    lines += [render_rule(r) for r in sorted(sys.co_rules, key=rule_key)]
    return "\n".join(lines) + ("\n" if lines else "")
