#!/usr/bin/env python3
"""Print the defect matrices of the standard cohomology class bases.

For u_plus the basis defects span the trace-zero matrices; for o_plus they
span the antisymmetric ones.  Each class is printed with its defect and the
flavor check, which doubles as a quick visual sanity pass on the exact
arithmetic:

    python3 scripts/defect_gallery.py --d 3
"""

import argparse

from schurmann import (
    basis_orthogonal,
    basis_unitary,
    build_presentation,
    defect_orthogonal,
    defect_unitary,
)


def show(title: str, basis: dict, defect, check):
    print(f"== {title} ({len(basis)} classes)")
    for label, c in basis.items():
        m = defect(c)
        status = "ok" if check(m) else "BROKEN"
        rows = "; ".join(
            "[" + ", ".join(repr(x) for x in row) + "]" for row in m.data
        )
        print(f"  {label:<10} {rows}   [{status}]")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--d", type=int, default=3)
    args = ap.parse_args()
    d = args.d

    show(
        f"u_plus d={d}",
        basis_unitary(build_presentation("u_plus", d)),
        defect_unitary,
        lambda m: m.trace().is_zero(),
    )
    show(
        f"o_plus d={d}",
        basis_orthogonal(build_presentation("o_plus", d)),
        defect_orthogonal,
        lambda m: (m + m.transpose()).is_zero(),
    )


if __name__ == "__main__":
    main()
