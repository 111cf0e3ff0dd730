"""Bounded coinduction verdicts and level witnesses."""

from __future__ import annotations

from coaxiom import (DropsAtLevel, NotInBound, Rule, SurvivesTo, System,
                     bounded_coinduction, generated, is_closed, is_consistent,
                     level_witness, sym)

P, Q, R = sym("p"), sym("q"), sym("r")

CHAIN = System([
    Rule(P, (Q,)), Rule(Q, (R,)),
    Rule(P, co=True), Rule(Q, co=True), Rule(R, co=True),
])

CYCLE = System([Rule(P, (Q,)), Rule(Q, (P,)), Rule(P, co=True)])


# ---------------------------------------------------------------------------
# the two set predicates

def test_is_closed():
    assert is_closed(CYCLE, {P, Q})
    assert not is_closed(CYCLE, {Q})       # q <- p pushes p in... p <- q fires
    assert is_closed(CYCLE, frozenset())   # nothing fires from nothing


def test_is_consistent():
    assert is_consistent(CYCLE, {P, Q})
    assert is_consistent(CYCLE, frozenset())
    assert not is_consistent(CHAIN, {P, Q})  # q needs r
    assert not is_consistent(CHAIN, {R})     # r has no regular rule at all


# ---------------------------------------------------------------------------
# bounded coinduction

def test_bcp_accepts_the_generated_set_itself():
    for sys_ in (CHAIN, CYCLE):
        g = generated(sys_).judgments
        verdict = bounded_coinduction(sys_, g)
        assert verdict.accepted and not verdict.failures


def test_bcp_accepts_consistent_subsets_of_the_bound():
    assert bounded_coinduction(CYCLE, {P, Q}).accepted
    assert bounded_coinduction(CYCLE, frozenset()).accepted


def test_bcp_rejects_and_explains_each_failure():
    verdict = bounded_coinduction(CYCLE, {P, Q, R})
    assert not verdict.accepted
    reasons = {j: why for j, why in verdict.failures}
    assert R in reasons  # r is not even in the bound
    verdict2 = bounded_coinduction(CHAIN, {P, Q})
    assert not verdict2.accepted
    assert {j for j, _ in verdict2.failures} == {Q}


def test_bcp_acceptance_implies_soundness():
    g = generated(CYCLE).judgments
    for candidate in ({P}, {Q}, {P, Q}, {P, R}, {P, Q, R}):
        if bounded_coinduction(CYCLE, candidate).accepted:
            assert candidate <= g


# ---------------------------------------------------------------------------
# level witnesses

def test_witness_not_in_bound():
    w = level_witness(CHAIN, sym("zap"), 5)
    assert isinstance(w, NotInBound)


def test_witness_drop_levels_down_the_chain():
    assert level_witness(CHAIN, R, 5) == DropsAtLevel(1)
    assert level_witness(CHAIN, Q, 5) == DropsAtLevel(2)
    assert level_witness(CHAIN, P, 5) == DropsAtLevel(3)


def test_witness_survivor_reports_fixpoint():
    w = level_witness(CYCLE, P, 5)
    assert isinstance(w, SurvivesTo)
    assert w.at_fixpoint


def test_witness_without_enough_rounds_is_inconclusive():
    w = level_witness(CHAIN, P, 2)
    assert w == SurvivesTo(2, at_fixpoint=False)
