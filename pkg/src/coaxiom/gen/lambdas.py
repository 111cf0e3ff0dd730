"""Lambda generator: big-step evaluation with observable divergence.

Judgments eval(e, r) relate a closed term to a result: either a value
(an abstraction) or ``inf`` for divergence.  The subject universe is
the closure of the root term under subterms of applications and
beta-redex contractions between its values; evaluation of a closure
term only ever produces terms already in the closure, so the grounded
system is complete for the root.

Terms are alpha-normalised (binders renamed to x0, x1, ... by binding
depth), which keeps the closure finite for many self-applications.
Terms that keep manufacturing genuinely new abstractions blow the
closure budget instead.
"""

from __future__ import annotations

from ..engine import Rule, System
from ..terms import INF, Term, sym, term_key
from .common import (DEFAULT_CAP, DEFAULT_CLOSURE_BUDGET,
                     ClosureBudgetExceeded, guard_cap)
from .inputs import App, Lam, LambdaTerm, Var, free_vars, render_lambda

__all__ = ["gen_lambda", "alpha_normal", "encode_lambda", "value_closure"]


def alpha_normal(e: LambdaTerm) -> LambdaTerm:
    """Rename binders to x0, x1, ... by their binding depth."""

    def go(t: LambdaTerm, env: dict[str, str], depth: int) -> LambdaTerm:
        if isinstance(t, Var):
            return Var(env.get(t.name, t.name))
        if isinstance(t, Lam):
            fresh = f"x{depth}"
            return Lam(fresh, go(t.body, {**env, t.var: fresh}, depth + 1))
        return App(go(t.fn, env, depth), go(t.arg, env, depth))

    return go(e, {}, 0)


def _subst(e: LambdaTerm, x: str, v: LambdaTerm) -> LambdaTerm:
    """Replace free x by the closed term v (no capture possible)."""
    if isinstance(e, Var):
        return v if e.name == x else e
    if isinstance(e, Lam):
        return e if e.var == x else Lam(e.var, _subst(e.body, x, v))
    return App(_subst(e.fn, x, v), _subst(e.arg, x, v))


def _contract(fn: Lam, arg: LambdaTerm) -> LambdaTerm:
    return alpha_normal(_subst(fn.body, fn.var, arg))


def _size(e: LambdaTerm) -> int:
    if isinstance(e, Var):
        return 1
    if isinstance(e, Lam):
        return 1 + _size(e.body)
    return 1 + _size(e.fn) + _size(e.arg)


def _occurrences(e: LambdaTerm, x: str) -> int:
    if isinstance(e, Var):
        return 1 if e.name == x else 0
    if isinstance(e, Lam):
        return 0 if e.var == x else _occurrences(e.body, x)
    return _occurrences(e.fn, x) + _occurrences(e.arg, x)


def encode_lambda(e: LambdaTerm) -> Term:
    """var(x) / lam(x, body) / app(fn, arg) as judgment terms."""
    if isinstance(e, Var):
        return sym("var", sym(e.name))
    if isinstance(e, Lam):
        return sym("lam", sym(e.var), encode_lambda(e.body))
    return sym("app", encode_lambda(e.fn), encode_lambda(e.arg))


def value_closure(root: LambdaTerm,
                  budget: int = DEFAULT_CLOSURE_BUDGET
                  ) -> tuple[list[LambdaTerm], list[Lam]]:
    """Close the root under application subterms and value contractions.

    Returns (closure, values), both sorted by encoded term.  The
    budget bounds the total number of syntax nodes the closure may
    accumulate; a contraction's size is known arithmetically before
    it is built, so ClosureBudgetExceeded fires without constructing
    the oversized term.  Self-applications that keep minting distinct
    abstractions double their size each round and hit the budget
    immediately; closures of well-behaved programs stay tiny.
    """
    start = alpha_normal(root)
    closure: list[LambdaTerm] = []
    seen: set[LambdaTerm] = set()
    total = 0

    def add(t: LambdaTerm) -> None:
        nonlocal total
        if t in seen:
            return
        total += _size(t)
        if total > budget:
            raise ClosureBudgetExceeded(budget)
        seen.add(t)
        closure.append(t)

    add(start)
    decomposed = 0
    contracted: set[tuple[Lam, LambdaTerm]] = set()
    while True:
        while decomposed < len(closure):
            t = closure[decomposed]
            decomposed += 1
            if isinstance(t, App):
                add(t.fn)
                add(t.arg)
        values = [t for t in closure if isinstance(t, Lam)]
        if not any(isinstance(t, App) for t in closure):
            break
        before = len(closure)
        for fn in values:
            for arg in values:
                if (fn, arg) in contracted:
                    continue
                contracted.add((fn, arg))
                grown = _size(fn.body) + \
                    _occurrences(fn.body, fn.var) * (_size(arg) - 1)
                if total + grown > budget:
                    raise ClosureBudgetExceeded(budget)
                add(_contract(fn, arg))
        if len(closure) == before and decomposed == len(closure):
            break

    out = sorted(closure, key=lambda t: term_key(encode_lambda(t)))
    return out, [t for t in out if isinstance(t, Lam)]


def gen_lambda(e: LambdaTerm, budget: int = DEFAULT_CLOSURE_BUDGET,
               cap: int = DEFAULT_CAP) -> System:
    """Ground big-step evaluation rules over the value closure of e.

    Per value v an axiom eval(v, v).  Per application f a in the
    closure: rules concluding eval(f a, r) from eval(f, fn), eval(a,
    arg) and eval(contract(fn, arg), r) for all value pairs; plus the
    divergence propagation rules for a diverging f and for a diverging
    a under a converging f.  One coaxiom eval(t, inf) per closure term.
    """
    if free_vars(e):
        raise ValueError(f"term must be closed, free: "
                         f"{', '.join(sorted(free_vars(e)))} "
                         f"in {render_lambda(e)}")
    closure, values = value_closure(e, budget)
    apps = [t for t in closure if isinstance(t, App)]
    nv = len(values)
    count = nv + len(apps) * (nv * nv * (nv + 1) + 1 + nv) + len(closure)
    guard_cap(count, cap)

    enc = {t: encode_lambda(t) for t in closure}
    results: list[Term] = [enc[v] for v in values] + [INF]

    rules: list[Rule] = []
    for v in values:
        rules.append(Rule(sym("eval", enc[v], enc[v])))
    for t in apps:
        for fn in values:
            for arg in values:
                red = _contract(fn, arg)
                for r in results:
                    rules.append(Rule(
                        sym("eval", enc[t], r),
                        (sym("eval", enc[t.fn], enc[fn]),
                         sym("eval", enc[t.arg], enc[arg]),
                         sym("eval", enc[red], r))))
        rules.append(Rule(sym("eval", enc[t], INF),
                          (sym("eval", enc[t.fn], INF),)))
        for fn in values:
            rules.append(Rule(sym("eval", enc[t], INF),
                              (sym("eval", enc[t.fn], enc[fn]),
                               sym("eval", enc[t.arg], INF))))
    for t in closure:
        rules.append(Rule(sym("eval", enc[t], INF), co=True))
    return System(rules)
