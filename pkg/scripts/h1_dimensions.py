#!/usr/bin/env python3
"""Tabulate cocycle space dimensions across presentations and sizes.

For each catalogue presentation the script solves the cocycle equations on
the counit representation exactly and prints the resulting dimension, e.g.
u_plus grows like d^2 while o_plus grows like d(d-1)/2.

    python3 scripts/h1_dimensions.py --max-d 4
"""

import argparse

from schurmann import build_presentation, counit_rep, rational, solve_cocycles


def presentations(d: int):
    yield "k_d", build_presentation("k_d", d)
    yield "u_plus", build_presentation("u_plus", d)
    yield "o_plus", build_presentation("o_plus", d)
    yield "u_q(2,1,..)", build_presentation(
        "u_q", d, q_diag=[rational(2)] + [rational(1)] * (d - 1)
    )
    if d == 2:
        yield "su_q(1/2)", build_presentation("su_q", d, q=rational("1/2"))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-d", dest="max_d", type=int, default=4)
    args = ap.parse_args()

    print(f"{'presentation':<14} {'d':>2} {'dim':>4}")
    for d in range(2, args.max_d + 1):
        for label, pres in presentations(d):
            space = solve_cocycles(counit_rep(pres))
            print(f"{label:<14} {d:>2} {space.dimension:>4}")


if __name__ == "__main__":
    main()
