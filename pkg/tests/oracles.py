"""Reference implementations the tests trust more than the engine.

Everything in this module is deliberately naive and shares no code with
the package: fixed points are found by enumerating subsets of the
universe rather than by iteration, distances come from a textbook
Dijkstra, first sets from the classic worklist algorithm, and so on.
When an oracle and the engine disagree, the oracle wins and the engine
has a bug.

Rules are passed around as plain triples ``(conclusion, premises, co)``
with hashable judgments, so none of the engine's own data structures
leak in here.
"""

from __future__ import annotations

import heapq
from typing import Dict, FrozenSet, Hashable, Iterable, List, Sequence, Tuple

Judgment = Hashable
RuleTriple = Tuple[Judgment, FrozenSet[Judgment], bool]


# ---------------------------------------------------------------------------
# set-theoretic fixed points by exhaustive bitmask enumeration

def rule_universe(rules: Iterable[RuleTriple]) -> frozenset:
    """Every judgment mentioned anywhere in the rules."""
    out = set()
    for conclusion, premises, _co in rules:
        out.add(conclusion)
        out.update(premises)
    return frozenset(out)


def _bit_encode(rules: Sequence[RuleTriple]):
    """Assign one bit per derivable judgment (i.e. per rule conclusion).

    Only conclusions can ever belong to a fixed point, so the universe
    is the conclusion set; a rule with a premise outside it can never
    fire and is dropped.  Returns (ordered judgments, encoded rules)
    where an encoded rule is ``(conclusion_bit, premise_mask, co)``.
    """
    concl = sorted({c for c, _, _ in rules}, key=repr)
    bit = {j: 1 << i for i, j in enumerate(concl)}
    encoded = []
    for c, ps, co in rules:
        if all(p in bit for p in ps):
            mask = 0
            for p in ps:
                mask |= bit[p]
            encoded.append((bit[c], mask, co))
    return concl, encoded


def _decode(concl, mask: int) -> frozenset:
    return frozenset(j for i, j in enumerate(concl) if mask >> i & 1)


def _fire(encoded, s: int) -> int:
    f = 0
    for cbit, mask, _co in encoded:
        if mask & s == mask:
            f |= cbit
    return f


def brute_lfp(rules: Sequence[RuleTriple]) -> frozenset:
    """Least fixed point as the intersection of every closed subset.

    A set is closed when applying the rules cannot leave it; by
    Knaster-Tarski the least fixed point is the meet of all of them.
    Co rules are treated like regular ones only if the caller promoted
    them first; here they are simply ignored.
    """
    concl, encoded = _bit_encode([r for r in rules if not r[2]])
    full = (1 << len(concl)) - 1
    out = full
    for s in range(full + 1):
        if _fire(encoded, s) & ~s == 0:
            out &= s
    return _decode(concl, out)


def brute_gfp(rules: Sequence[RuleTriple]) -> frozenset:
    """Greatest fixed point as the union of every consistent subset."""
    concl, encoded = _bit_encode([r for r in rules if not r[2]])
    full = (1 << len(concl)) - 1
    out = 0
    for s in range(full + 1):
        if s & ~_fire(encoded, s) == 0:
            out |= s
    return _decode(concl, out)


def brute_bound(rules: Sequence[RuleTriple]) -> frozenset:
    """Least fixed point once the co rules are promoted to regular ones."""
    return brute_lfp([(c, ps, False) for c, ps, _ in rules])


def brute_generated(rules: Sequence[RuleTriple]) -> frozenset:
    """Union of all consistent subsets of the bound (regular rules only).

    A union of consistent sets is itself consistent, so this is exactly
    the greatest consistent subset of the bound without ever iterating.
    The bit universe must cover co-rule conclusions too: they can be in
    the bound even when no regular rule concludes them.
    """
    beta = brute_bound(rules)
    concl = sorted({c for c, _, _ in rules}, key=repr)
    bit = {j: 1 << i for i, j in enumerate(concl)}
    encoded = []
    for c, ps, co in rules:
        if not co and all(p in bit for p in ps):
            mask = 0
            for p in ps:
                mask |= bit[p]
            encoded.append((bit[c], mask, False))
    beta_mask = 0
    for j in beta:
        beta_mask |= bit[j]
    out = 0
    s = beta_mask
    while True:
        if s & ~_fire(encoded, s) == 0:
            out |= s
        if s == 0:
            break
        s = (s - 1) & beta_mask  # next subset of the bound
    return _decode(concl, out)


def brute_survives(rules: Sequence[RuleTriple], j: Judgment,
                   n: int) -> bool:
    """Does ``j`` survive ``n`` rounds of pruning the bound?

    Round zero is the bound itself; each later round keeps a judgment
    only if some regular rule concludes it from survivors of the
    previous round.  This is the oracle for approximated provability.
    """
    s = brute_bound(rules)
    regular = [(c, ps, co) for c, ps, co in rules if not co]
    for _ in range(n):
        s = frozenset(c for c, ps, _ in regular if ps <= s) & s
    return j in s


# ---------------------------------------------------------------------------
# graphs

def reachable_from(successors: Dict[str, Sequence[str]], start: str) -> frozenset:
    """Depth-first reachability, including the start node."""
    seen: set = set()
    stack = [start]
    while stack:
        v = stack.pop()
        if v in seen:
            continue
        seen.add(v)
        stack.extend(successors.get(v, ()))
    return frozenset(seen)


def dijkstra_to(nodes: Iterable[str], weights: Dict[Tuple[str, str], int],
                target: str) -> Dict[str, object]:
    """Cheapest cost from every node to ``target`` along directed edges.

    Unreachable nodes map to the string ``"inf"`` so the result can be
    compared against judgment arguments without importing term types.
    """
    incoming: Dict[str, List[Tuple[str, int]]] = {v: [] for v in nodes}
    for (src, dst), w in weights.items():
        incoming[dst].append((src, w))
    dist: Dict[str, object] = {v: "inf" for v in nodes}
    dist[target] = 0
    heap: List[Tuple[int, str]] = [(0, target)]
    while heap:
        d, v = heapq.heappop(heap)
        if dist[v] != d:
            continue
        for src, w in incoming[v]:
            cand = d + w
            if dist[src] == "inf" or cand < dist[src]:
                dist[src] = cand
                heapq.heappush(heap, (cand, src))
    return dist


# ---------------------------------------------------------------------------
# grammars

def first_sets(productions: Dict[str, List[Tuple[str, ...]]],
               nonterminals: Iterable[str]) -> Dict[str, frozenset]:
    """Classic worklist computation of first sets, one per nonterminal.

    ``productions`` maps a nonterminal to its alternative bodies, each a
    tuple of symbols; a symbol is a nonterminal iff it appears as a key
    of the mapping.  The empty body is the empty production.
    """
    nts = set(nonterminals)
    nullable: set = set()
    changed = True
    while changed:
        changed = False
        for a, bodies in productions.items():
            if a in nullable:
                continue
            if any(all(x in nullable for x in body) for body in bodies):
                nullable.add(a)
                changed = True
    first: Dict[str, set] = {a: set() for a in productions}
    changed = True
    while changed:
        changed = False
        for a, bodies in productions.items():
            for body in bodies:
                for x in body:
                    if x not in nts:
                        if x not in first[a]:
                            first[a].add(x)
                            changed = True
                        break
                    if not first[x] <= first[a]:
                        first[a] |= first[x]
                        changed = True
                    if x not in nullable:
                        break
    return {a: frozenset(s) for a, s in first.items()}


# ---------------------------------------------------------------------------
# call-by-value evaluation

class FuelOut(Exception):
    """The big-step evaluator ran out of fuel (treated as divergence)."""


def bigstep(e, fuel: int = 10_000):
    """Big-step call-by-value evaluation of a closed term.

    Works directly on the parsed ``Var``/``Lam``/``App`` shapes but does
    its own substitution, so it shares nothing with the generator's
    closure machinery.  Raises :class:`FuelOut` when the step budget is
    exhausted, which the tests interpret as divergence.
    """
    from coaxiom.gen import App, Lam, Var

    def subst(t, x, v):
        if isinstance(t, Var):
            return v if t.name == x else t
        if isinstance(t, Lam):
            if t.var == x:
                return t
            return Lam(t.var, subst(t.body, x, v))
        return App(subst(t.fn, x, v), subst(t.arg, x, v))

    budget = [fuel]

    def go(t):
        if budget[0] <= 0:
            raise FuelOut()
        budget[0] -= 1
        if isinstance(t, Lam):
            return t
        if isinstance(t, Var):
            raise ValueError(f"open term: {t.name}")
        fn = go(t.fn)
        arg = go(t.arg)
        return go(subst(fn.body, fn.var, arg))

    return go(e)
