"""Predicates over the circular list l = 1 : l.

No judgment about l has a finite derivation -- the list never ends --
yet each of these questions has one right answer.  The coaxioms decide
which infinite derivations count, and the bounded-coinduction checker
replays the argument a human would make on paper.
"""

from coaxiom import (bounded_coinduction, generated, num, parse_judgment,
                     render_term, sort_judgments)
from coaxiom.gen import gen_listpred, parse_equations

ONES = parse_equations("l = 1 : l;")


def ask(pred, x=None):
    got = generated(gen_listpred(ONES, pred, "l", x=x)).judgments
    question = pred if x is None else f"{pred} {render_term(x)}"
    answers = ", ".join(render_term(j) for j in sort_judgments(got))
    print(f"  {question:10} -> {answers}")


def main():
    print("l = 1 : l, asked five ways:")
    ask("allPos")
    ask("member", x=num(1))
    ask("member", x=num(2))
    ask("elems")
    ask("maxElem")
    print()

    # The same verdicts, certified instead of computed: a candidate set
    # is accepted iff it sits inside the bound and is consistent.
    sys_ = gen_listpred(ONES, "allPos", "l")
    good = frozenset({parse_judgment("allPos(l,true)")})
    bad = frozenset({parse_judgment("allPos(l,false)")})
    print("bounded coinduction on candidate sets:")
    print(f"  {{allPos(l,true)}}  accepted? "
          f"{bounded_coinduction(sys_, good).accepted}")
    verdict = bounded_coinduction(sys_, bad)
    print(f"  {{allPos(l,false)}} accepted? {verdict.accepted}")
    for judgment, reason in verdict.failures:
        print(f"    {render_term(judgment)}: {reason}")


if __name__ == "__main__":
    main()
