"""FIRST sets as an inference system instead of a worklist.

first(A, F) collects the terminals that can begin a string derived
from A.  A left-recursive production would send a naive recursive
computation into a loop; here it is just a cycle, and the descending
phase settles it.
"""

from pathlib import Path

from coaxiom import generated, render_term, sort_judgments
from coaxiom.gen import gen_first, parse_grammar

GRAMMAR_FILE = Path(__file__).parent / "data" / "greeting.grammar"


def show(source):
    print("grammar:")
    for line in source.strip().splitlines():
        if not line.lstrip().startswith("%"):
            print(f"  {line}")
    got = generated(gen_first(parse_grammar(source))).judgments
    print("first sets:")
    for j in sort_judgments(got):
        print(f"  {render_term(j)}")
    print()


def main():
    show(GRAMMAR_FILE.read_text())
    show("E -> E p | t ;")  # left recursion is harmless
    show("S -> A b ; A -> S | ;")  # a nullable cycle through two symbols


if __name__ == "__main__":
    main()
