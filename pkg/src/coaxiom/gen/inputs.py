"""Input descriptions the generators consume, with their file formats.

Four little languages, all sharing ``%`` end-of-line comments:

* graphs — ``node a`` / ``edge a b`` / ``edge a b 5`` lines;
* grammars — ``S -> A S | b ;`` statements (uppercase heads are
  nonterminals, lowercase body symbols are terminals, an empty
  alternative is the empty string);
* equation systems — ``l = 1 : l ;``, ``m = nil ;``,
  ``t = tree(0, l) ;`` with multi-element cons chains like
  ``l1 = t2 : t1 : l1 ;`` normalised into binary conses behind fresh
  tail variables;
* lambda terms — ``\\x. e``, application by juxtaposition, parentheses.

Identifiers that end up inside judgments (graph nodes, equation
variables, terminals) must be legal term symbols: a lowercase letter
followed by letters, digits or underscores.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Union

from ..dsl import ParseError
from ..terms import Num, Sym, Term
from .common import MalformedEquations

__all__ = [
    "Edge",
    "Graph",
    "Grammar",
    "NilBind",
    "ConsBind",
    "TreeBind",
    "EquationSystem",
    "Var",
    "Lam",
    "App",
    "LambdaTerm",
    "parse_graph",
    "parse_grammar",
    "parse_equations",
    "parse_lambda",
    "render_lambda",
    "free_vars",
]

_SYMBOL_RE = re.compile(r"[a-z][A-Za-z0-9_]*\Z")
_NONTERM_RE = re.compile(r"[A-Z][A-Za-z0-9_]*\Z")

# Symbol names the grammar and equation encodings claim for themselves.
_RESERVED = {"eps", "nt", "str", "tree", "nil", "inf"}


# ---------------------------------------------------------------------------
# a shared scanner for the small input languages

@dataclass(frozen=True)
class _Tok:
    kind: str  # WORD, INT, a literal special, or EOF
    text: str
    line: int
    column: int


def _scan(text: str, specials: tuple[str, ...]) -> list[_Tok]:
    ordered = sorted(specials, key=len, reverse=True)
    toks: list[_Tok] = []
    line, col, i, n = 1, 1, 0, len(text)
    while i < n:
        c = text[i]
        if c == "\n":
            line, col = line + 1, 1
            i += 1
            continue
        if c in " \t\r":
            i += 1
            col += 1
            continue
        if c == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        hit = next((s for s in ordered if text.startswith(s, i)), None)
        if hit is not None:
            toks.append(_Tok(hit, hit, line, col))
            i += len(hit)
            col += len(hit)
            continue
        m = re.match(r"-?[0-9]+", text[i:])
        if m:
            toks.append(_Tok("INT", m.group(), line, col))
            i += m.end()
            col += m.end()
            continue
        m = re.match(r"[A-Za-z][A-Za-z0-9_]*", text[i:])
        if m:
            toks.append(_Tok("WORD", m.group(), line, col))
            i += m.end()
            col += m.end()
            continue
        raise ParseError(line, col, ("token",), repr(c))
    toks.append(_Tok("EOF", "", line, col))
    return toks


def _bad(tok: _Tok, *expected: str) -> ParseError:
    found = tok.text if tok.kind != "EOF" else "end of input"
    return ParseError(tok.line, tok.column, expected, found)


# ---------------------------------------------------------------------------
# graphs

@dataclass(frozen=True)
class Edge:
    src: str
    dst: str
    weight: Optional[int] = None


@dataclass(frozen=True)
class Graph:
    nodes: tuple[str, ...]
    edges: tuple[Edge, ...]

    def successors(self, v: str) -> tuple[Edge, ...]:
        return tuple(sorted((e for e in self.edges if e.src == v),
                            key=lambda e: e.dst))

    @property
    def weighted(self) -> bool:
        return any(e.weight is not None for e in self.edges)


def parse_graph(text: str) -> Graph:
    nodes: list[str] = []
    edges: list[Edge] = []
    seen_edges: set[tuple[str, str]] = set()
    toks = _scan(text, ())
    i = 0

    def at(k: int) -> _Tok:
        return toks[min(k, len(toks) - 1)]

    while at(i).kind != "EOF":
        head = at(i)
        if head.kind != "WORD" or head.text not in ("node", "edge"):
            raise _bad(head, "node", "edge")
        if head.text == "node":
            name = at(i + 1)
            if name.kind != "WORD" or not _SYMBOL_RE.match(name.text):
                raise _bad(name, "node identifier")
            if name.text in nodes:
                raise ParseError(name.line, name.column,
                                 ("fresh node identifier",), name.text)
            nodes.append(name.text)
            i += 2
        else:
            src, dst = at(i + 1), at(i + 2)
            for t in (src, dst):
                if t.kind != "WORD" or not _SYMBOL_RE.match(t.text):
                    raise _bad(t, "node identifier")
            for t in (src, dst):
                if t.text not in nodes:
                    raise ParseError(t.line, t.column, ("declared node",), t.text)
            weight = None
            i += 3
            if at(i).kind == "INT":
                weight = int(at(i).text)
                if weight < 0:
                    raise ParseError(at(i).line, at(i).column,
                                     ("natural weight",), at(i).text)
                i += 1
            if (src.text, dst.text) in seen_edges:
                raise ParseError(src.line, src.column, ("fresh edge",),
                                 f"{src.text} {dst.text}")
            seen_edges.add((src.text, dst.text))
            edges.append(Edge(src.text, dst.text, weight))
    return Graph(tuple(nodes), tuple(edges))


# ---------------------------------------------------------------------------
# grammars

@dataclass(frozen=True)
class Grammar:
    """Context-free grammar; bodies are symbol tuples, () is the empty string."""

    terminals: tuple[str, ...]
    nonterminals: tuple[str, ...]
    productions: tuple[tuple[str, tuple[tuple[str, ...], ...]], ...]

    def bodies(self, nt: str) -> tuple[tuple[str, ...], ...]:
        for head, bs in self.productions:
            if head == nt:
                return bs
        raise KeyError(nt)


def parse_grammar(text: str) -> Grammar:
    toks = _scan(text, ("->", "|", ";"))
    i = 0
    prods: dict[str, list[tuple[str, ...]]] = {}
    order: list[str] = []
    body_syms: list[_Tok] = []

    while toks[i].kind != "EOF":
        head = toks[i]
        if head.kind != "WORD" or not _NONTERM_RE.match(head.text):
            raise _bad(head, "nonterminal")
        i += 1
        if toks[i].kind != "->":
            raise _bad(toks[i], "->")
        i += 1
        body: list[str] = []
        while True:
            t = toks[i]
            if t.kind == "WORD":
                body.append(t.text)
                body_syms.append(t)
                i += 1
            elif t.kind in ("|", ";"):
                prods.setdefault(head.text, []).append(tuple(body))
                if head.text not in order:
                    order.append(head.text)
                body = []
                i += 1
                if t.kind == ";":
                    break
            else:
                raise _bad(t, "symbol", "|", ";")

    nonterminals = tuple(order)
    terminals: list[str] = []
    for t in body_syms:
        if _NONTERM_RE.match(t.text):
            if t.text not in prods:
                raise ParseError(t.line, t.column,
                                 ("nonterminal with productions",), t.text)
        else:
            if not _SYMBOL_RE.match(t.text):
                raise _bad(t, "terminal")
            if t.text in _RESERVED:
                raise ParseError(t.line, t.column,
                                 ("unreserved terminal name",), t.text)
            if t.text not in terminals:
                terminals.append(t.text)
    lowered = [nt.lower() for nt in nonterminals]
    if len(set(lowered)) != len(lowered):
        raise ParseError(1, 1, ("case-distinct nonterminals",),
                         "nonterminal names collide when lowercased")
    return Grammar(tuple(sorted(terminals)), nonterminals,
                   tuple((nt, tuple(prods[nt])) for nt in nonterminals))


# ---------------------------------------------------------------------------
# equation systems

@dataclass(frozen=True)
class NilBind:
    pass


@dataclass(frozen=True)
class ConsBind:
    head: Term
    tail: str


@dataclass(frozen=True)
class TreeBind:
    label: int
    kids: str


Binding = Union[NilBind, ConsBind, TreeBind]


@dataclass(frozen=True)
class EquationSystem:
    """Guarded recursive equations over lists, trees and digit streams.

    Every binding starts with one constructor (``nil``, a cons, or a
    ``tree`` node), so the system is productive by construction.
    Multi-element cons chains are already normalised: each cons holds
    exactly one head and a tail variable.
    """

    bindings: tuple[tuple[str, Binding], ...]

    def binding(self, var: str) -> Binding:
        for name, b in self.bindings:
            if name == var:
                return b
        raise MalformedEquations(f"unbound variable: {var}")

    def has(self, var: str) -> bool:
        return any(name == var for name, _ in self.bindings)


def _check_equations(bindings: list[tuple[str, Binding]]) -> None:
    by_name = dict(bindings)

    def is_list(var: str) -> bool:
        return isinstance(by_name.get(var), (NilBind, ConsBind))

    for name, b in bindings:
        if isinstance(b, ConsBind):
            if b.tail not in by_name:
                raise MalformedEquations(f"unbound tail variable: {b.tail}")
            if not is_list(b.tail):
                raise MalformedEquations(
                    f"tail of {name} must be a list, got tree: {b.tail}")
            h = b.head
            if isinstance(h, Sym) and h.name == "tree":
                kids = h.args[1]
                assert isinstance(kids, Sym)
                if kids.name not in by_name or not is_list(kids.name):
                    raise MalformedEquations(
                        f"tree children of an element of {name} must be "
                        f"a bound list: {kids.name}")
            elif isinstance(h, Sym):
                if h.name not in by_name:
                    raise MalformedEquations(f"unbound element variable: {h.name}")
                if not isinstance(by_name[h.name], TreeBind):
                    raise MalformedEquations(
                        f"element {h.name} of {name} must be a tree variable")
        elif isinstance(b, TreeBind):
            if b.kids not in by_name or not is_list(b.kids):
                raise MalformedEquations(
                    f"children of tree {name} must be a bound list: {b.kids}")


def parse_equations(text: str) -> EquationSystem:
    toks = _scan(text, ("=", ":", ";", "(", ")", ","))
    i = 0
    raw: list[tuple[str, list, _Tok]] = []  # (var, chain items, where)

    def expect(kind: str) -> _Tok:
        nonlocal i
        t = toks[i]
        if t.kind != kind:
            raise _bad(t, kind)
        i += 1
        return t

    def atom():
        """One chain item: INT, variable, ``nil`` or ``tree(INT, var)``."""
        nonlocal i
        t = toks[i]
        if t.kind == "INT":
            i += 1
            return Num(int(t.text))
        if t.kind == "WORD":
            if t.text == "nil":
                i += 1
                return "nil"
            if t.text == "tree":
                i += 1
                expect("(")
                lab = expect("INT")
                expect(",")
                kid = expect("WORD")
                if not _SYMBOL_RE.match(kid.text):
                    raise _bad(kid, "variable")
                expect(")")
                return Sym("tree", (Num(int(lab.text)), Sym(kid.text)))
            if not _SYMBOL_RE.match(t.text) or t.text in _RESERVED:
                raise _bad(t, "variable")
            i += 1
            return Sym(t.text)
        raise _bad(t, "integer", "variable", "nil", "tree(")

    while toks[i].kind != "EOF":
        var = toks[i]
        if var.kind != "WORD" or not _SYMBOL_RE.match(var.text) \
                or var.text in _RESERVED:
            raise _bad(var, "variable")
        i += 1
        expect("=")
        chain = [atom()]
        while toks[i].kind == ":":
            i += 1
            chain.append(atom())
        expect(";")
        raw.append((var.text, chain, var))

    names = [v for v, _, _ in raw]
    for v, _, where in raw:
        if names.count(v) > 1:
            raise ParseError(where.line, where.column, ("fresh variable",), v)

    used = set(names)

    def fresh(base: str) -> str:
        k = 1
        while f"{base}_{k}" in used:
            k += 1
        used.add(f"{base}_{k}")
        return f"{base}_{k}"

    bindings: list[tuple[str, Binding]] = []
    for var, chain, where in raw:
        if len(chain) == 1:
            item = chain[0]
            if item == "nil":
                bindings.append((var, NilBind()))
            elif isinstance(item, Sym) and item.name == "tree":
                label = item.args[0]
                kids = item.args[1]
                assert isinstance(label, Num) and isinstance(kids, Sym)
                bindings.append((var, TreeBind(label.value, kids.name)))
            else:
                raise ParseError(where.line, where.column,
                                 ("cons chain", "nil", "tree(...)"),
                                 "a bare value")
        else:
            *heads, tail = chain
            if not isinstance(tail, Sym) or tail.name == "tree" or tail == "nil":
                raise ParseError(where.line, where.column,
                                 ("tail variable",), "a non-variable tail")
            if any(h == "nil" for h in heads):
                raise ParseError(where.line, where.column,
                                 ("element",), "nil used as an element")
            cur = var
            for k, h in enumerate(heads):
                nxt = tail.name if k == len(heads) - 1 else fresh(var)
                bindings.append((cur, ConsBind(h, nxt)))
                cur = nxt

    _check_equations(bindings)
    return EquationSystem(tuple(bindings))


# ---------------------------------------------------------------------------
# lambda terms

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Lam:
    var: str
    body: "LambdaTerm"


@dataclass(frozen=True)
class App:
    fn: "LambdaTerm"
    arg: "LambdaTerm"


LambdaTerm = Union[Var, Lam, App]


def parse_lambda(text: str) -> LambdaTerm:
    toks = _scan(text, ("\\", ".", "(", ")"))
    i = 0

    def peek() -> _Tok:
        return toks[i]

    def expr() -> LambdaTerm:
        nonlocal i
        if peek().kind == "\\":
            i += 1
            v = peek()
            if v.kind != "WORD":
                raise _bad(v, "variable")
            i += 1
            if peek().kind != ".":
                raise _bad(peek(), ".")
            i += 1
            return Lam(v.text, expr())
        return apps()

    def apps() -> LambdaTerm:
        nonlocal i
        e = atom()
        while peek().kind in ("WORD", "(", "\\"):
            if peek().kind == "\\":
                # trailing abstraction extends as far right as possible
                e = App(e, expr())
                return e
            e = App(e, atom())
        return e

    def atom() -> LambdaTerm:
        nonlocal i
        t = peek()
        if t.kind == "WORD":
            i += 1
            return Var(t.text)
        if t.kind == "(":
            i += 1
            e = expr()
            if peek().kind != ")":
                raise _bad(peek(), ")")
            i += 1
            return e
        raise _bad(t, "variable", "(", "\\")

    e = expr()
    if peek().kind != "EOF":
        raise _bad(peek(), "end of input")
    return e


def free_vars(e: LambdaTerm) -> frozenset[str]:
    if isinstance(e, Var):
        return frozenset((e.name,))
    if isinstance(e, Lam):
        return free_vars(e.body) - {e.var}
    return free_vars(e.fn) | free_vars(e.arg)


def render_lambda(e: LambdaTerm) -> str:
    if isinstance(e, Var):
        return e.name
    if isinstance(e, Lam):
        return f"\\{e.var}. {render_lambda(e.body)}"
    fn = render_lambda(e.fn)
    if isinstance(e.fn, Lam):
        fn = f"({fn})"
    arg = render_lambda(e.arg)
    if not isinstance(e.arg, Var):
        arg = f"({arg})"
    return f"{fn} {arg}"
