"""Adding infinite decimal streams, most significant digit first.

add(x, y, r, c) says the digit streams x and y sum to the stream r
while emitting carry c out of the leftmost position.  No digit is ever
the last one, yet the answer is pinned down -- as long as the carries
range over a small alphabet.

The finite alphabet is also what keeps the system honest: the bogus
judgment add(z, z, z, 1) ("zeros plus zeros is zeros, carry one")
would need a carry of ten one digit in, a hundred after that, and so
on, and the descending phase prunes that tower from the top.
"""

from coaxiom import generated, render_term, sort_judgments
from coaxiom.gen import gen_add, parse_equations

STREAMS = parse_equations("z = 0 : z; n = 9 : n;")


def show(title, sys_):
    print(f"{title}:")
    for j in sort_judgments(generated(sys_).judgments):
        print(f"  {render_term(j)}")
    print()


def main():
    show("0.000... + 0.000... = 0.999... borrows one",
         gen_add(STREAMS, "z", "z", "n"))
    show("0.999... + 0.999... = 0.000... carries two  (i.e. 1 + 1 = 2)",
         gen_add(STREAMS, "n", "n", "z"))
    show("zeros plus zeros: only the carry-free reading survives",
         gen_add(STREAMS, "z", "z", "z"))
    show("same, with carries widened to [-10, 10] -- still no carry one",
         gen_add(STREAMS, "z", "z", "z", carries=range(-10, 11)))


if __name__ == "__main__":
    main()
