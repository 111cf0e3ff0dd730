"""Proof objects for the three flavours of derivability.

* :class:`WfProof` — a finite well-founded tree over the extended
  system (co rules usable anywhere).  Exists exactly for judgments in
  the bound.
* approximated proofs of level ``n`` — the same tree type, but co rules
  may only occur at depth ``n`` or deeper.  Exists exactly for
  judgments that survive ``n`` rounds of the descending phase.
* :class:`RegularProof` — a finite *choice map* assigning one regular
  rule to every judgment reachable from the root; cycles are what makes
  it non-well-founded.  Exists exactly for judgments in the bounded
  fixed point.

Constructors are deterministic: wherever a rule has to be picked, the
canonically least admissible one is taken (regular rules before co
rules at a tie).  ``validate`` re-checks a proof object against a
system, reporting every offending node.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Union

from .engine import (DEFAULT_BUDGET, Interpretation, Rule, System, bound,
                     generated, rule_key, step)
from .terms import Term, render_term, term_key

__all__ = [
    "RuleRef",
    "WfProof",
    "RegularProof",
    "Violation",
    "ValidationReport",
    "WF_EXTENDED",
    "APPROX",
    "REGULAR_GENERATED",
    "prove_wf",
    "prove_approx",
    "prove_regular",
    "validate",
    "proof_to_dict",
    "proof_from_dict",
]


@dataclass(frozen=True)
class RuleRef:
    """Position of a rule in its system: ``co`` selects the co-rule list."""

    index: int
    co: bool = False


@dataclass(frozen=True)
class WfProof:
    """Well-founded proof tree node.

    Children appear in canonical premise order; their judgments are
    exactly the premises of the referenced rule.
    """

    judgment: Term
    rule: RuleRef
    children: tuple["WfProof", ...] = ()

    def depth(self) -> int:
        return 1 + max((c.depth() for c in self.children), default=0)

    def co_depths(self) -> list[int]:
        """Depths (root = 0) of all co-rule applications in the tree."""
        out: list[int] = []

        def walk(node: WfProof, d: int) -> None:
            if node.rule.co:
                out.append(d)
            for c in node.children:
                walk(c, d + 1)

        walk(self, 0)
        return out


@dataclass(frozen=True, eq=True)
class RegularProof:
    """Cyclic proof: one regular rule per judgment, closed under premises."""

    root: Term
    choice: dict[Term, int] = field(default_factory=dict)


@dataclass(frozen=True)
class Violation:
    """One offending proof node: its path from the root and the reason code."""

    path: tuple[int, ...]
    judgment: Term
    reason: str


@dataclass(frozen=True)
class ValidationReport:
    mode: str
    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


# ---------------------------------------------------------------------------
# construction


def _entered_at(trace: tuple[frozenset[Term], ...]) -> dict[Term, int]:
    seen: dict[Term, int] = {}
    for i, s in enumerate(trace):
        for j in s:
            if j not in seen:
                seen[j] = i
    return seen


def _candidates(sys: System, j: Term) -> list[tuple[RuleRef, Rule]]:
    """All rules concluding j, canonically ordered, regular before co."""
    cands = [(RuleRef(i, False), sys.regular_rules[i])
             for i in sys.by_conclusion.get(j, ())]
    cands += [(RuleRef(i, True), sys.co_rules[i])
              for i in sys.co_rules_for(j)]
    cands.sort(key=lambda pair: rule_key(pair[1]))
    return cands


def _build_wf(sys: System, entered: dict[Term, int], j: Term,
              memo: dict[Term, WfProof]) -> WfProof:
    done = memo.get(j)
    if done is not None:
        return done
    k = entered[j]
    for ref, rule in _candidates(sys, j):
        if all(p in entered and entered[p] < k for p in rule.premises):
            children = tuple(_build_wf(sys, entered, p, memo) for p in rule.premises)
            proof = WfProof(j, ref, children)
            memo[j] = proof
            return proof
    raise AssertionError(f"no admissible rule for {render_term(j)} at iteration {k}")


def prove_wf(sys: System, j: Term, budget: int = DEFAULT_BUDGET) -> Optional[WfProof]:
    """A well-founded proof over the extended system, or None.

    Succeeds exactly when ``j`` is in the bound.  The tree is read off
    the ascending phase-1 trace: a judgment first derived at iteration
    ``k`` is proved by the canonically least rule all of whose premises
    appeared strictly earlier.
    """
    b = bound(sys, budget)
    if j not in b.judgments:
        return None
    entered = _entered_at(b.trace)
    return _build_wf(sys, entered, j, {})


def _descending_chain(sys: System, start: frozenset[Term], upto: int
                      ) -> tuple[list[frozenset[Term]], int]:
    """Iterates of step() from a closed set, up to ``upto`` or stability.

    Returns (chain, stable_at) where chain[k] is the k-th iterate for
    k <= min(upto, stable_at), and chain[stable_at] is the fixed point
    if stability was reached (stable_at == len(chain)-1), else upto.
    """
    chain = [start]
    for k in range(upto):
        nxt = step(sys, chain[-1])
        if nxt == chain[-1]:
            return chain, k
        chain.append(nxt)
    return chain, upto


def _chain_at(chain: list[frozenset[Term]], k: int) -> frozenset[Term]:
    return chain[min(k, len(chain) - 1)]


def prove_approx(sys: System, j: Term, n: int,
                 budget: int = DEFAULT_BUDGET) -> Optional[WfProof]:
    """A level-``n`` approximated proof, or None.

    Level 0 places no restriction and delegates to :func:`prove_wf`.
    For ``n > 0`` the root must be concluded by a regular rule from
    premises that themselves carry level-``n-1`` proofs, so co rules
    can only appear at depth ``n`` or deeper.  Succeeds exactly when
    ``j`` survives ``n`` rounds of the descending phase.
    """
    if n < 0:
        raise ValueError("level must be >= 0")
    b = bound(sys, budget)
    if n == 0:
        if j not in b.judgments:
            return None
        return _build_wf(sys, _entered_at(b.trace), j, {})
    chain, _ = _descending_chain(sys, b.judgments, n)
    if j not in _chain_at(chain, n):
        return None
    return _canonical_build(sys, chain, _entered_at(b.trace), j, n, {})


def _canonical_build(sys: System, chain: list[frozenset[Term]],
                     entered: dict[Term, int], j: Term, n: int,
                     wf_memo: dict[Term, WfProof]) -> WfProof:
    ordered_ix: dict[Term, list[int]] = {
        c: sorted(ix, key=lambda i: rule_key(sys.regular_rules[i]))
        for c, ix in sys.by_conclusion.items()
    }
    memo: dict[tuple[Term, int], WfProof] = {}

    def build(g: Term, k: int) -> WfProof:
        if k == 0:
            return _build_wf(sys, entered, g, wf_memo)
        key = (g, k)
        done = memo.get(key)
        if done is not None:
            return done
        prev = _chain_at(chain, k - 1)
        for i in ordered_ix.get(g, ()):
            if sys._premise_sets[i] <= prev:
                rule = sys.regular_rules[i]
                children = tuple(build(p, k - 1) for p in rule.premises)
                proof = WfProof(g, RuleRef(i, False), children)
                memo[key] = proof
                return proof
        raise AssertionError(f"no regular rule for {render_term(g)} at level {k}")

    return build(j, n)


def prove_regular(sys: System, j: Term,
                  budget: int = DEFAULT_BUDGET) -> Optional[RegularProof]:
    """A regular (possibly cyclic) proof, or None.

    Succeeds exactly when ``j`` is in the bounded fixed point; every
    judgment reachable from the root is mapped to the canonically least
    regular rule whose premises stay inside the bounded fixed point.
    """
    g = generated(sys, budget)
    if j not in g.judgments:
        return None
    inside = g.judgments
    choice: dict[Term, int] = {}
    todo = [j]
    while todo:
        cur = todo.pop()
        if cur in choice:
            continue
        picked = None
        for i in sorted(sys.by_conclusion.get(cur, ()),
                        key=lambda i: rule_key(sys.regular_rules[i])):
            if sys._premise_sets[i] <= inside:
                picked = i
                break
        if picked is None:
            raise AssertionError(
                f"{render_term(cur)} has no rule inside the bounded fixed point")
        choice[cur] = picked
        todo.extend(p for p in sys.regular_rules[picked].premises if p not in choice)
    return RegularProof(j, choice)


# ---------------------------------------------------------------------------
# validation

WF_EXTENDED = "wf-extended"
APPROX = "approx"
REGULAR_GENERATED = "regular-generated"


def _resolve(sys: System, ref: RuleRef) -> Optional[Rule]:
    rules = sys.co_rules if ref.co else sys.regular_rules
    if 0 <= ref.index < len(rules):
        return rules[ref.index]
    return None


def _check_tree(sys: System, node: WfProof, path: tuple[int, ...],
                min_co_depth: Optional[int], out: list[Violation]) -> None:
    rule = _resolve(sys, node.rule)
    if rule is None:
        out.append(Violation(path, node.judgment, "bad-rule-ref"))
    else:
        if rule.conclusion != node.judgment:
            out.append(Violation(path, node.judgment, "conclusion-mismatch"))
        had = sorted((c.judgment for c in node.children), key=term_key)
        if tuple(had) != rule.premises:
            out.append(Violation(path, node.judgment, "premise-mismatch"))
        if node.rule.co and min_co_depth is not None and len(path) < min_co_depth:
            out.append(Violation(path, node.judgment, "co-rule-depth"))
    for i, child in enumerate(node.children):
        _check_tree(sys, child, path + (i,), min_co_depth, out)


def validate(sys: System, proof: Union[WfProof, RegularProof], mode: str,
             level: Optional[int] = None,
             budget: int = DEFAULT_BUDGET) -> ValidationReport:
    """Re-check a proof object; the report lists every violated node.

    Modes: ``"wf-extended"`` (finite tree, any rules), ``"approx"``
    (additionally, co rules only at depth >= ``level``), and
    ``"regular-generated"`` (choice map well-formed and every judgment
    inside the bound).
    """
    out: list[Violation] = []
    if mode == WF_EXTENDED or mode == APPROX:
        if not isinstance(proof, WfProof):
            raise ValueError(f"{mode} validation expects a WfProof")
        min_co = None
        if mode == APPROX:
            if level is None or level < 0:
                raise ValueError("approx validation needs level >= 0")
            min_co = level
        _check_tree(sys, proof, (), min_co, out)
        label = mode if mode == WF_EXTENDED else f"approx({level})"
        return ValidationReport(label, tuple(out))
    if mode == REGULAR_GENERATED:
        if not isinstance(proof, RegularProof):
            raise ValueError("regular-generated validation expects a RegularProof")
        inside = bound(sys, budget).judgments
        if proof.root not in proof.choice:
            out.append(Violation((), proof.root, "missing-choice"))
        for j in sorted(proof.choice, key=term_key):
            i = proof.choice[j]
            if not (0 <= i < len(sys.regular_rules)):
                out.append(Violation((), j, "bad-rule-ref"))
                continue
            rule = sys.regular_rules[i]
            if rule.conclusion != j:
                out.append(Violation((), j, "conclusion-mismatch"))
            for p in rule.premises:
                if p not in proof.choice:
                    out.append(Violation((), j, "missing-choice"))
                    break
            if j not in inside:
                out.append(Violation((), j, "not-in-bound"))
        return ValidationReport(REGULAR_GENERATED, tuple(out))
    raise ValueError(f"unknown validation mode: {mode!r}")


# ---------------------------------------------------------------------------
# serialization

def proof_to_dict(proof: Union[WfProof, RegularProof],
                  sys: Optional[System] = None) -> dict:
    """Schema: node = judgment string, rule id, co flag, children;
    a judgment already expanded earlier appears as a back-reference
    ``{"judgment": ..., "back": true}`` (that is how cycles stay finite).
    """
    if isinstance(proof, WfProof):
        return {
            "judgment": render_term(proof.judgment),
            "rule": proof.rule.index,
            "co": proof.rule.co,
            "children": [proof_to_dict(c) for c in proof.children],
        }
    if sys is None:
        raise ValueError("serialising a RegularProof needs the system")
    expanded: set[Term] = set()

    def node(j: Term) -> dict:
        if j in expanded:
            return {"judgment": render_term(j), "back": True}
        expanded.add(j)
        i = proof.choice[j]
        rule = sys.regular_rules[i]
        return {
            "judgment": render_term(j),
            "rule": i,
            "co": False,
            "children": [node(p) for p in rule.premises],
        }

    return node(proof.root)


def proof_from_dict(d: dict) -> Union[WfProof, RegularProof]:
    """Inverse of :func:`proof_to_dict`.

    A tree without back-references loads as a :class:`WfProof`; one
    with back-references loads as the :class:`RegularProof` whose choice
    map collects the expanded nodes.
    """
    from .dsl import parse_judgment

    def has_back(nd: dict) -> bool:
        if nd.get("back"):
            return True
        return any(has_back(c) for c in nd.get("children", ()))

    if not has_back(d):
        def tree(nd: dict) -> WfProof:
            return WfProof(parse_judgment(nd["judgment"]),
                           RuleRef(nd["rule"], bool(nd.get("co"))),
                           tuple(tree(c) for c in nd.get("children", ())))
        return tree(d)

    choice: dict[Term, int] = {}

    def collect(nd: dict) -> None:
        if nd.get("back"):
            return
        choice[parse_judgment(nd["judgment"])] = nd["rule"]
        for c in nd.get("children", ()):
            collect(c)

    collect(d)
    return RegularProof(parse_judgment(d["judgment"]), choice)
