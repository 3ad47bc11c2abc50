#!/usr/bin/env python3
"""Emit the ideal-count remainder R(x) = [x]_F - c_F x on a geometric grid.

Writes CSV to stdout: x, count, c_F * x, remainder, remainder / x^(1/3).

Example:
    python scripts/remainder_grid.py --field q:-1 --xmax 1e6 --points 40
"""

import argparse
import math

from idealfunc.analytic import residue_c_F
from idealfunc.field import parse_field
from idealfunc.ideals import ideal_count


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--field", default="q:-1",
                        help="field designation: q, q:<m>, or table:<path>")
    parser.add_argument("--xmin", type=float, default=100.0)
    parser.add_argument("--xmax", type=float, default=1e6)
    parser.add_argument("--points", type=int, default=40)
    args = parser.parse_args()

    field = parse_field(args.field)
    c = residue_c_F(field).value
    ratio = (args.xmax / args.xmin) ** (1.0 / max(args.points - 1, 1))

    print("x,count,main,remainder,remainder_over_cuberoot")
    for i in range(args.points):
        x = args.xmin * ratio**i
        count = ideal_count(field, x)
        rem = count - c * x
        print(f"{x:.6g},{count},{c * x:.6f},{rem:.6f},{rem / x ** (1 / 3):.6f}")


if __name__ == "__main__":
    main()
