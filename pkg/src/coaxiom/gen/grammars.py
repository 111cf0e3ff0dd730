"""Grammar generator: first-sets over sentential suffixes.

Judgments first(s, F) pair a string s with a terminal set F.  The
string universe holds every suffix of every production body, a
single-symbol string per nonterminal, and the empty string.  Terminal
sets range over the powerset of the grammar's terminals.
"""

from __future__ import annotations

import itertools

from ..engine import Rule, System
from ..terms import FinSet, Term, sym
from .common import DEFAULT_CAP, guard_cap
from .inputs import Grammar

__all__ = ["gen_first", "encode_string", "nullable_nonterminals"]


def nullable_nonterminals(g: Grammar) -> frozenset[str]:
    """Nonterminals that derive the empty string."""
    nullable: set[str] = set()
    changed = True
    while changed:
        changed = False
        for head, bodies in g.productions:
            if head in nullable:
                continue
            for body in bodies:
                if all(x in nullable for x in body):
                    nullable.add(head)
                    changed = True
                    break
    return frozenset(nullable)


def _encode_symbol(x: str, g: Grammar) -> Term:
    if x in g.nonterminals:
        return sym("nt", sym(x.lower()))
    return sym(x)


def encode_string(s: tuple[str, ...], g: Grammar) -> Term:
    """Empty string -> eps; one symbol -> itself; longer -> str(...)."""
    if not s:
        return sym("eps")
    if len(s) == 1:
        return _encode_symbol(s[0], g)
    return sym("str", *(_encode_symbol(x, g) for x in s))


def _terminal_subsets(g: Grammar) -> list[tuple[str, ...]]:
    out = []
    for k in range(len(g.terminals) + 1):
        out.extend(itertools.combinations(g.terminals, k))
    return out


def _to_set(ts: tuple[str, ...]) -> FinSet:
    return FinSet(tuple(sym(t) for t in ts))


def gen_first(g: Grammar, cap: int = DEFAULT_CAP) -> System:
    """Ground the first-set rules of the grammar over its terminals.

    Strings headed by a terminal are axioms; strings of length at
    least two headed by a nonterminal propagate that nonterminal's
    first set, with a second tail premise when the head is nullable.
    The empty string has the axiom first(eps, {}); each nonterminal
    collects the union over its bodies.  One coaxiom first(A, {}) per
    nonterminal.
    """
    nullable = nullable_nonterminals(g)

    strings: set[tuple[str, ...]] = {()}
    for _, bodies in g.productions:
        for body in bodies:
            for i in range(len(body) + 1):
                strings.add(body[i:])
    for a in g.nonterminals:
        strings.add((a,))
    ordered = sorted(strings)

    nsub = 2 ** len(g.terminals)
    count = 1 + len(g.nonterminals)  # eps axiom + coaxioms
    for s in ordered:
        if not s:
            continue
        if s[0] not in g.nonterminals:
            count += 1
        elif len(s) >= 2:
            count += nsub * nsub if s[0] in nullable else nsub
    for _, bodies in g.productions:
        count += nsub ** len(bodies)
    guard_cap(count, cap)

    subsets = _terminal_subsets(g)
    rules: list[Rule] = [Rule(sym("first", sym("eps"), FinSet()))]
    for s in ordered:
        if not s:
            continue
        enc = encode_string(s, g)
        head = s[0]
        if head not in g.nonterminals:
            rules.append(Rule(sym("first", enc, _to_set((head,)))))
            continue
        if len(s) < 2:
            continue
        head_enc = _encode_symbol(head, g)
        tail_enc = encode_string(s[1:], g)
        if head not in nullable:
            for f in subsets:
                rules.append(Rule(sym("first", enc, _to_set(f)),
                                  (sym("first", head_enc, _to_set(f)),)))
        else:
            for f in subsets:
                for f2 in subsets:
                    union = tuple(sorted(set(f) | set(f2)))
                    rules.append(Rule(
                        sym("first", enc, _to_set(union)),
                        (sym("first", head_enc, _to_set(f)),
                         sym("first", tail_enc, _to_set(f2)))))
    for head, bodies in g.productions:
        head_enc = _encode_symbol(head, g)
        for combo in itertools.product(subsets, repeat=len(bodies)):
            union = tuple(sorted(set().union(*map(set, combo)))) if combo else ()
            premises = tuple(sym("first", encode_string(b, g), _to_set(f))
                             for b, f in zip(bodies, combo))
            rules.append(Rule(sym("first", head_enc, _to_set(union)), premises))
    for a in g.nonterminals:
        rules.append(Rule(sym("first", _encode_symbol(a, g), FinSet()), co=True))
    return System(rules)
