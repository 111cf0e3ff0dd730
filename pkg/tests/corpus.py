"""Seeded random rule systems shared by the agreement suites.

Every system stays within a 12-judgment universe and 40 rules so the
bitmask oracles in :mod:`oracles` remain exhaustive.  The same seed
always yields the same system; tests that quote a seed in a failure
message are therefore reproducible with no extra state.
"""

from __future__ import annotations

import random
from typing import FrozenSet, List, Tuple

from coaxiom import Rule, System
from coaxiom.terms import Term, sym

Triple = Tuple[Term, FrozenSet[Term], bool]

CORPUS_SIZE = 220


def random_triples(seed: int) -> List[Triple]:
    """One random system, as plain (conclusion, premises, co) triples.

    Sizes are skewed small: a handful of judgments and a dozen rules is
    the common case, with the 12/40 ceiling only occasionally reached.
    Roughly a quarter of the rules are co rules and premise counts
    cluster at zero and one so that axioms, chains, and genuine cycles
    all show up often.
    """
    rng = random.Random(seed)
    n = rng.randint(2, 12)
    universe = [sym(f"j{i}") for i in range(n)]
    nrules = rng.randint(1, 40)
    triples: List[Triple] = []
    for _ in range(nrules):
        conclusion = rng.choice(universe)
        width = rng.choice((0, 0, 1, 1, 1, 2, 2, 3))
        premises = frozenset(rng.sample(universe, k=min(width, n)))
        co = rng.random() < 0.25
        triples.append((conclusion, premises, co))
    return triples


def as_system(triples: List[Triple]) -> System:
    return System(Rule(c, tuple(ps), co=co) for c, ps, co in triples)


def corpus(count: int = CORPUS_SIZE) -> List[Tuple[int, List[Triple]]]:
    return [(seed, random_triples(seed)) for seed in range(count)]
