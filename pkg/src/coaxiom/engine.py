"""Inference systems with coaxioms and their bounded fixed point.

A system is a finite set of ground rules, each a finite premise set and
a conclusion, tagged either regular or co.  The regular rules alone
admit the usual inductive (least) and coinductive (greatest)
interpretations; the co rules single out an interpretation in between,
computed in two phases:

* phase 1 (the *bound*): the inductive interpretation of the system
  extended with the co rules taken as regular rules;
* phase 2 (the *kernel*): the greatest set that is consistent with the
  regular rules and contained in the bound, obtained by descending
  iteration from the bound.

Both phases are naive whole-set fixed point iterations, on purpose: the
recorded traces (one set per iteration) are part of the observable
contract and match the hand-listable runs in small examples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from .terms import Term, term_key

__all__ = [
    "Rule",
    "System",
    "Interpretation",
    "EngineError",
    "BudgetExceeded",
    "NotPreFixed",
    "DEFAULT_BUDGET",
    "INDUCTIVE",
    "COINDUCTIVE",
    "BOUND",
    "GENERATED",
    "rule_key",
    "step",
    "extend",
    "restrict",
    "ind",
    "coind",
    "bound",
    "kernel",
    "generated",
    "sort_judgments",
]

DEFAULT_BUDGET = 100_000

INDUCTIVE = "inductive"
COINDUCTIVE = "coinductive"
BOUND = "bound"
GENERATED = "generated"


class EngineError(Exception):
    """Base class for engine failures."""


class BudgetExceeded(EngineError):
    """A fixed point iteration did not stabilise within its budget."""

    def __init__(self, budget: int):
        super().__init__(f"no fixed point within {budget} iterations")
        self.budget = budget


class NotPreFixed(EngineError):
    """kernel() was handed a set that is not closed under the rules.

    ``witness`` is the canonically least judgment derivable from the
    candidate bound in one step but missing from it.
    """

    def __init__(self, witness: Term):
        from .terms import render_term

        super().__init__(f"bound is not closed under the rules: {render_term(witness)}")
        self.witness = witness


@dataclass(frozen=True)
class Rule:
    """One ground rule.  Premises are deduplicated and canonically sorted.

    ``co=False`` marks a regular rule, ``co=True`` a co rule (a coaxiom
    when the premise tuple is empty).
    """

    conclusion: Term
    premises: tuple[Term, ...] = ()
    co: bool = False

    def __post_init__(self) -> None:
        ordered = tuple(sorted(set(self.premises), key=term_key))
        object.__setattr__(self, "premises", ordered)


def rule_key(r: Rule):
    """Canonical order on rules: conclusion, then premises, regular before co."""
    return (term_key(r.conclusion), tuple(term_key(p) for p in r.premises), r.co)


class System:
    """An inference system: regular rules plus co rules.

    Duplicate rules are dropped on construction and an index from
    conclusion to regular-rule positions is maintained.  Rule order is
    preserved for reference purposes only; no operation's result depends
    on it.
    """

    __slots__ = ("regular_rules", "co_rules", "by_conclusion", "_co_by_conclusion",
                 "_premise_sets", "_co_premise_sets")

    def __init__(self, rules: Iterable[Rule] = ()):
        regular: list[Rule] = []
        co: list[Rule] = []
        seen: set[Rule] = set()
        for r in rules:
            if r in seen:
                continue
            seen.add(r)
            (co if r.co else regular).append(r)
        self.regular_rules: tuple[Rule, ...] = tuple(regular)
        self.co_rules: tuple[Rule, ...] = tuple(co)
        index: dict[Term, list[int]] = {}
        for i, r in enumerate(self.regular_rules):
            index.setdefault(r.conclusion, []).append(i)
        self.by_conclusion: dict[Term, tuple[int, ...]] = {
            c: tuple(ix) for c, ix in index.items()
        }
        co_index: dict[Term, list[int]] = {}
        for i, r in enumerate(self.co_rules):
            co_index.setdefault(r.conclusion, []).append(i)
        self._co_by_conclusion: dict[Term, tuple[int, ...]] = {
            c: tuple(ix) for c, ix in co_index.items()
        }
        # Premise sets are consulted on every iteration of every fixed
        # point; precompute them once.
        self._premise_sets = tuple(frozenset(r.premises) for r in self.regular_rules)
        self._co_premise_sets = tuple(frozenset(r.premises) for r in self.co_rules)

    def co_rules_for(self, conclusion: Term) -> tuple[int, ...]:
        return self._co_by_conclusion.get(conclusion, ())

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, System):
            return NotImplemented
        return (frozenset(self.regular_rules) == frozenset(other.regular_rules)
                and frozenset(self.co_rules) == frozenset(other.co_rules))

    def __hash__(self) -> int:
        return hash((frozenset(self.regular_rules), frozenset(self.co_rules)))

    def __repr__(self) -> str:
        return (f"System({len(self.regular_rules)} regular, "
                f"{len(self.co_rules)} co)")


@dataclass(frozen=True)
class Interpretation:
    """A computed judgment set together with how it was reached.

    ``trace`` lists the judgment set after each productive iteration —
    ascending for the inductive phases, descending for the coinductive
    ones — and always ends with ``judgments``.  For ``generated``
    results, ``phase1`` carries the full bound-phase interpretation so
    both traces stay retrievable.
    """

    judgments: frozenset[Term]
    phase: str
    trace: tuple[frozenset[Term], ...] = ()
    phase1: Optional["Interpretation"] = None

    def __contains__(self, j: Term) -> bool:
        return j in self.judgments

    def sorted_judgments(self) -> list[Term]:
        return sort_judgments(self.judgments)


def sort_judgments(js: Iterable[Term]) -> list[Term]:
    return sorted(js, key=term_key)


# ---------------------------------------------------------------------------
# the eight operations


def step(sys: System, s: frozenset[Term] | set[Term], use_co: bool = False) -> frozenset[Term]:
    """One rule application: conclusions of rules whose premises all hold in s.

    Regular rules only, unless ``use_co`` also enables the co rules.
    """
    if not isinstance(s, (set, frozenset)):
        s = frozenset(s)
    out = {r.conclusion
           for r, ps in zip(sys.regular_rules, sys._premise_sets)
           if ps <= s}
    if use_co:
        out.update(r.conclusion
                   for r, ps in zip(sys.co_rules, sys._co_premise_sets)
                   if ps <= s)
    return frozenset(out)


def extend(sys: System) -> System:
    """The system with every co rule re-tagged as a regular rule."""
    retagged = (Rule(r.conclusion, r.premises) for r in sys.co_rules)
    return System(itertools.chain(sys.regular_rules, retagged))


def restrict(sys: System, s: Iterable[Term]) -> System:
    """Keep only regular rules whose conclusion lies in ``s``; drop co rules."""
    keep = s if isinstance(s, (set, frozenset)) else frozenset(s)
    return System(r for r in sys.regular_rules if r.conclusion in keep)


def _ascend(sys: System, budget: int, use_co: bool) -> tuple[frozenset[Term], ...]:
    """Iterate step from the empty set upward; trace has one entry per
    productive application plus, for an immediately-fixed start, the
    fixed point itself."""
    s: frozenset[Term] = frozenset()
    trace: list[frozenset[Term]] = []
    for _ in range(budget):
        t = step(sys, s, use_co)
        if t == s:
            if not trace:
                trace.append(s)
            return tuple(trace)
        trace.append(t)
        s = t
    raise BudgetExceeded(budget)


def _descend(sys: System, start: frozenset[Term], clamp: frozenset[Term],
             budget: int) -> tuple[frozenset[Term], ...]:
    """Iterate s -> step(s) & clamp downward from ``start``.

    The trace starts at the first application's result (the starting set
    itself is not listed), so an already-stable start gives a one-entry
    trace.
    """
    s = start
    trace: list[frozenset[Term]] = []
    for _ in range(budget):
        t = step(sys, s) & clamp
        if t == s:
            if not trace:
                trace.append(s)
            return tuple(trace)
        trace.append(t)
        s = t
    raise BudgetExceeded(budget)


def ind(sys: System, budget: int = DEFAULT_BUDGET) -> Interpretation:
    """Inductive interpretation of the regular rules (least fixed point)."""
    trace = _ascend(sys, budget, use_co=False)
    return Interpretation(trace[-1], INDUCTIVE, trace)


def coind(sys: System, budget: int = DEFAULT_BUDGET) -> Interpretation:
    """Coinductive interpretation of the regular rules (greatest fixed point).

    Descends from the set of all regular-rule conclusions, which already
    contains every candidate judgment.
    """
    start = frozenset(r.conclusion for r in sys.regular_rules)
    trace = _descend(sys, start, start, budget)
    return Interpretation(trace[-1], COINDUCTIVE, trace)


def bound(sys: System, budget: int = DEFAULT_BUDGET) -> Interpretation:
    """Phase 1: inductive interpretation of the extended system."""
    trace = _ascend(extend(sys), budget, use_co=False)
    return Interpretation(trace[-1], BOUND, trace)


def kernel(sys: System, beta: Iterable[Term],
           budget: int = DEFAULT_BUDGET) -> Interpretation:
    """Phase 2: greatest consistent subset of a closed set ``beta``.

    Raises :class:`NotPreFixed` if ``beta`` is not closed under the
    regular rules (the defining descent is only meaningful below a
    pre-fixed point).
    """
    b = beta if isinstance(beta, frozenset) else frozenset(beta)
    escaped = step(sys, b) - b
    if escaped:
        raise NotPreFixed(min(escaped, key=term_key))
    trace = _descend(sys, b, b, budget)
    return Interpretation(trace[-1], GENERATED, trace)


def generated(sys: System, budget: int = DEFAULT_BUDGET) -> Interpretation:
    """Bounded fixed point: kernel of the system's own bound."""
    b = bound(sys, budget)
    k = kernel(sys, b.judgments, budget)
    return Interpretation(k.judgments, GENERATED, k.trace, phase1=b)
