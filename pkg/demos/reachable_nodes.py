"""Walk through the visited-sets example on a two-node cycle.

The graph has an edge a -> b, an edge b -> a, and an isolated node c.
visit(v, N) is meant to hold when N is the set of nodes some depth-first
walk from v marks as visited.  Inductively the judgments for a and b
never get off the ground (each needs the other first); coinductively
too many hold (the pair can pretend to have visited c as well).  The
bounded fixed point lands exactly on the reachable sets.
"""

from pathlib import Path

from coaxiom import coind, generated, ind, render_term, sort_judgments
from coaxiom.gen import gen_visit, parse_graph

GRAPH_FILE = Path(__file__).parent / "data" / "cycle.graph"


def show(title, judgments):
    print(f"{title}:")
    for j in sort_judgments(judgments):
        print(f"  {render_term(j)}")
    print()


def steps(snapshots):
    for i, snapshot in enumerate(snapshots, 1):
        line = ", ".join(render_term(j) for j in sort_judgments(snapshot))
        print(f"  ({i}) {line}")


def main():
    sys_ = gen_visit(parse_graph(GRAPH_FILE.read_text()))
    print(f"instantiated system: {len(sys_.regular_rules)} rules, "
          f"{len(sys_.co_rules)} coaxioms\n")

    show("inductive (too little: only the isolated node c gets anywhere)",
         ind(sys_).judgments)
    show("coinductive (too much: a and b pretend to have visited c)",
         coind(sys_).judgments)

    result = generated(sys_)
    print("phase 1, ascending with the coaxioms admitted (the bound):")
    steps(result.phase1.trace)
    print("phase 2, descending inside the bound (coaxioms withdrawn):")
    steps(result.trace)
    print()
    show("generated (exactly the reachable sets)", result.judgments)


if __name__ == "__main__":
    main()
