"""Cheapest route costs on a weighted graph, without a metric argument.

dist(v, u, c) relates vertex v to the cheapest cost c of reaching u.
The zero-weight cycle between a and b would let a purely coinductive
reading claim absurdly cheap routes; the bounded reading keeps exactly
the true costs, and unreachability comes out as an ordinary judgment
dist(v, u, inf) rather than a missing one.
"""

from pathlib import Path

from coaxiom import (DropsAtLevel, NotInBound, SurvivesTo, coind, generated,
                     level_witness, parse_judgment, render_term,
                     sort_judgments)
from coaxiom.gen import gen_dist, gen_minpath, parse_graph

GRAPH_FILE = Path(__file__).parent / "data" / "toll.graph"


def show(title, judgments):
    print(f"{title}:")
    for j in sort_judgments(judgments):
        print(f"  {render_term(j)}")
    print()


def outcome(w):
    if isinstance(w, NotInBound):
        return "not in the bound at all"
    if isinstance(w, DropsAtLevel):
        return f"drops at descending level {w.level}"
    assert isinstance(w, SurvivesTo)
    tail = "the full fixpoint" if w.at_fixpoint else "the horizon"
    return f"survives to level {w.level} ({tail})"


def main():
    g = parse_graph(GRAPH_FILE.read_text())

    to_e = gen_dist(g, "e")
    show("cheapest costs to e (generated)", generated(to_e).judgments)

    overshoot = coind(to_e).judgments - generated(to_e).judgments
    show("extra judgments a plain gfp would also accept", overshoot)

    show("costs to d: everything else is priced at infinity",
         generated(gen_dist(g, "d")).judgments)

    print("how long wrong costs last in the descending phase:")
    for text in ("dist(a,e,inf)", "dist(a,e,5)", "dist(a,e,0)"):
        w = level_witness(to_e, parse_judgment(text), 10)
        print(f"  {text:14} {outcome(w)}")
    print()

    show("cheapest paths, with the routes spelled out",
         generated(gen_minpath(g, "e")).judgments)


if __name__ == "__main__":
    main()
