"""Term construction, canonical ordering, and rendering."""

from __future__ import annotations

from coaxiom import (FinSet, INF, Num, Sym, finset, num, parse_judgment,
                     render_term, sym, term_key)


def test_finset_sorts_and_deduplicates():
    assert finset(num(2), num(1), num(2)) == finset(num(1), num(2))
    assert finset(num(3), num(1)).elements == (num(1), num(3))


def test_nullary_symbol_is_bare():
    assert render_term(sym("a")) == "a"
    assert sym("a") == Sym("a", ())


def test_kind_order_num_inf_sym_set():
    ordered = sorted([finset(), sym("a"), INF, num(5)], key=term_key)
    assert ordered == [num(5), INF, sym("a"), finset()]


def test_numbers_order_by_value_below_inf():
    assert term_key(num(-7)) < term_key(num(0)) < term_key(num(3))
    assert term_key(num(10**9)) < term_key(INF)


def test_symbols_order_by_name_then_arity_then_args():
    a, b = sym("a"), sym("b")
    assert term_key(a) < term_key(b)
    assert term_key(sym("f", a)) < term_key(sym("f", a, a))
    assert term_key(sym("f", a)) < term_key(sym("f", b))


def test_sets_order_by_elements():
    assert term_key(finset()) < term_key(finset(num(1)))
    assert term_key(finset(num(1))) < term_key(finset(num(1), num(2)))
    assert term_key(finset(num(1))) < term_key(finset(num(2)))


def test_render_nested_term():
    t = sym("dist", sym("a"), sym("e"), INF)
    assert render_term(t) == "dist(a,e,inf)"
    s = sym("visit", sym("a"), finset(sym("a"), sym("b")))
    assert render_term(s) == "visit(a,{a,b})"


def test_render_negative_number():
    assert render_term(sym("add", num(-1))) == "add(-1)"


def test_render_empty_set():
    assert render_term(finset()) == "{}"


def test_render_parse_round_trip_on_samples():
    samples = [
        sym("p"),
        num(42),
        num(-3),
        INF,
        finset(),
        finset(num(1), sym("a"), INF),
        sym("f", sym("g", sym("x")), finset(sym("y"))),
        sym("minPath", sym("a"), sym("e"), sym("p", sym("a"), sym("e")), num(5)),
    ]
    for t in samples:
        assert parse_judgment(render_term(t)) == t


def test_terms_are_hashable_and_comparable_as_values():
    assert len({sym("a"), Sym("a"), num(1), Num(1)}) == 2
    assert sym("f", num(1)) == sym("f", num(1))
    assert sym("f", num(1)) != sym("f", num(2))
