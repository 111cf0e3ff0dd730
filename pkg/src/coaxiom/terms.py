"""First-order terms used as judgments.

A judgment is a ground term built from four constructors: symbol
applications like ``visit(a, {a,b})``, integer literals, the special
value ``inf`` (greater than every integer, used for divergence and
unreachability), and finite sets of terms.  Set terms are normalised on
construction — elements are deduplicated and stored in canonical order —
so structural equality coincides with set equality.

A single total order covers all terms: integers before ``inf`` before
symbols before sets; integers by value, symbols by name, then arity,
then argument-wise, sets element-wise with shorter prefixes first.
That order is what "canonical" means throughout the package: sorted
premise tuples, sorted trace listings, deterministic tie-breaks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

__all__ = [
    "Term",
    "Sym",
    "Num",
    "Inf",
    "FinSet",
    "INF",
    "sym",
    "num",
    "finset",
    "term_key",
    "render_term",
]


@dataclass(frozen=True)
class Sym:
    """Symbol application ``name(arg1, ..., argk)``; nullary renders bare."""

    name: str
    args: tuple["Term", ...] = ()


@dataclass(frozen=True)
class Num:
    value: int


@dataclass(frozen=True)
class Inf:
    """The single point above every integer."""


@dataclass(frozen=True)
class FinSet:
    """Finite set of terms; elements are kept sorted and duplicate-free."""

    elements: tuple["Term", ...] = ()

    def __post_init__(self) -> None:
        ordered = tuple(sorted(set(self.elements), key=term_key))
        object.__setattr__(self, "elements", ordered)


Term = Union[Sym, Num, Inf, FinSet]

INF = Inf()


def sym(name: str, *args: Term) -> Sym:
    return Sym(name, tuple(args))


def num(value: int) -> Num:
    return Num(value)


def finset(*elements: Term) -> FinSet:
    return FinSet(tuple(elements))


# Kind ranks for the total order: integer < inf < symbol < set.
_RANKS = {Num: 0, Inf: 1, Sym: 2, FinSet: 3}


def term_key(t: Term):
    """Sort key realising the canonical total order on terms.

    Keys of distinct kinds differ in their first component, so Python's
    tuple comparison never compares payloads of different types.
    """
    if isinstance(t, Num):
        return (0, t.value)
    if isinstance(t, Inf):
        return (1,)
    if isinstance(t, Sym):
        return (2, t.name, len(t.args), tuple(term_key(a) for a in t.args))
    if isinstance(t, FinSet):
        return (3, tuple(term_key(e) for e in t.elements))
    raise TypeError(f"not a term: {t!r}")


def render_term(t: Term) -> str:
    """Canonical textual form; parsing it back yields an equal term."""
    if isinstance(t, Num):
        return str(t.value)
    if isinstance(t, Inf):
        return "inf"
    if isinstance(t, Sym):
        if not t.args:
            return t.name
        return f"{t.name}({','.join(render_term(a) for a in t.args)})"
    if isinstance(t, FinSet):
        return "{" + ",".join(render_term(e) for e in t.elements) + "}"
    raise TypeError(f"not a term: {t!r}")
