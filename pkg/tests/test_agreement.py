"""Engine, proofs, and checks against the exhaustive oracles.

Every system in the seeded corpus is small enough for the bitmask
oracles to enumerate all subsets, so these suites establish agreement
with the defining set-theoretic characterisations rather than with any
particular iteration strategy.
"""

from __future__ import annotations

import random

from coaxiom import (APPROX, DropsAtLevel, NotInBound, REGULAR_GENERATED,
                     SurvivesTo, WF_EXTENDED, bound, bounded_coinduction,
                     coind, generated, ind, level_witness, prove_approx,
                     prove_regular, prove_wf, validate)
from corpus import as_system, corpus
from oracles import (brute_bound, brute_generated, brute_gfp, brute_lfp,
                     brute_survives, rule_universe)

CORPUS = corpus()


def conclusions(triples):
    return sorted({c for c, _, _ in triples}, key=repr)


# ---------------------------------------------------------------------------
# interpretations

def test_ind_matches_brute_lfp_on_every_corpus_system():
    for seed, triples in CORPUS:
        got = ind(as_system(triples)).judgments
        assert got == brute_lfp(triples), f"seed {seed}"


def test_coind_matches_brute_gfp_on_every_corpus_system():
    for seed, triples in CORPUS:
        got = coind(as_system(triples)).judgments
        assert got == brute_gfp(triples), f"seed {seed}"


def test_bound_matches_brute_bound_on_every_corpus_system():
    for seed, triples in CORPUS:
        got = bound(as_system(triples)).judgments
        assert got == brute_bound(triples), f"seed {seed}"


def test_generated_matches_brute_generated_on_every_corpus_system():
    for seed, triples in CORPUS:
        got = generated(as_system(triples)).judgments
        assert got == brute_generated(triples), f"seed {seed}"


# ---------------------------------------------------------------------------
# proof existence and validity (a slice of the corpus keeps this quick;
# the acceptance suite runs the full corpus)

def check_proof_agreement(seed, triples, levels=(0, 1, 2, 3)):
    sys_ = as_system(triples)
    b = bound(sys_).judgments
    g = generated(sys_).judgments
    for j in rule_universe(triples):
        wf = prove_wf(sys_, j)
        assert (wf is not None) == (j in b), f"seed {seed}: wf on {j}"
        if wf is not None:
            assert validate(sys_, wf, WF_EXTENDED).ok, f"seed {seed}"
        for n in levels:
            ap = prove_approx(sys_, j, n)
            assert (ap is not None) == brute_survives(triples, j, n), \
                f"seed {seed}: approx({n}) on {j}"
            if ap is not None:
                assert validate(sys_, ap, APPROX, level=n).ok, f"seed {seed}"
        reg = prove_regular(sys_, j)
        assert (reg is not None) == (j in g), f"seed {seed}: regular on {j}"
        if reg is not None:
            assert validate(sys_, reg, REGULAR_GENERATED).ok, f"seed {seed}"


def test_proof_existence_tracks_the_three_characterisations():
    for seed, triples in CORPUS[:60]:
        check_proof_agreement(seed, triples)


# ---------------------------------------------------------------------------
# bounded coinduction and witnesses

def check_bcp_agreement(seed, triples):
    sys_ = as_system(triples)
    g = generated(sys_).judgments
    assert bounded_coinduction(sys_, g).accepted, f"seed {seed}"
    rng = random.Random(seed * 7919)
    pool = conclusions(triples)
    for _ in range(6):
        candidate = frozenset(j for j in pool if rng.random() < 0.4)
        verdict = bounded_coinduction(sys_, candidate)
        if verdict.accepted:
            assert candidate <= g, f"seed {seed}: unsound acceptance"
        else:
            assert verdict.failures, f"seed {seed}: silent rejection"


def test_bcp_accepts_generated_and_never_overshoots():
    for seed, triples in CORPUS:
        check_bcp_agreement(seed, triples)


def check_witness_agreement(seed, triples, max_n=6):
    sys_ = as_system(triples)
    for j in conclusions(triples):
        w = level_witness(sys_, j, max_n)
        for n in range(max_n + 1):
            has = prove_approx(sys_, j, n) is not None
            if isinstance(w, NotInBound):
                expect = False
            elif isinstance(w, DropsAtLevel):
                expect = n < w.level
            else:
                assert isinstance(w, SurvivesTo)
                if not w.at_fixpoint and n > w.level:
                    continue  # the witness makes no claim beyond its horizon
                expect = True
            assert has == expect, f"seed {seed}: {j} at level {n} vs {w}"


def test_level_witness_agrees_with_approximated_proofs():
    for seed, triples in CORPUS[:60]:
        check_witness_agreement(seed, triples)


# ---------------------------------------------------------------------------
# endpoints of the coaxiom dial

def test_no_co_rules_collapses_generated_to_ind():
    for seed, triples in CORPUS:
        stripped = [t for t in triples if not t[2]]
        sys_ = as_system(stripped)
        assert generated(sys_).judgments == ind(sys_).judgments, f"seed {seed}"


def test_coaxioms_on_every_conclusion_recover_coind():
    for seed, triples in CORPUS:
        regular = [t for t in triples if not t[2]]
        saturated = regular + [(c, frozenset(), True)
                               for c in conclusions(regular)]
        sys_ = as_system(saturated)
        reg_sys = as_system(regular)
        assert generated(sys_).judgments == coind(reg_sys).judgments, \
            f"seed {seed}"


def test_generated_grows_with_the_coaxiom_set():
    for seed, triples in CORPUS[:120]:
        sys_ = as_system(triples)
        rng = random.Random(seed * 104729)
        extra = [(c, frozenset(), True)
                 for c in conclusions(triples) if rng.random() < 0.5]
        wider = as_system(triples + extra)
        assert generated(sys_).judgments <= generated(wider).judgments, \
            f"seed {seed}"
