#!/usr/bin/env python3
"""Sweep a summatory remainder report over a geometric grid and emit CSV.

Kinds: mobius (order-k Mobius sum against its linear main term), liouville
(cancellation probes with two normalizations), qfree (k-free counts against
c_F x / zeta_F(k)).

Example:
    python scripts/summatory_sweep.py --kind mobius --field q:-1 --order 2 \
        --xmin 1e3 --xmax 1e7 --points 30
"""

import argparse

from idealfunc.field import parse_field
from idealfunc.summatory import CSV_HEADER, sweep


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--kind", choices=("mobius", "liouville", "qfree"),
                        required=True)
    parser.add_argument("--field", default="q",
                        help="field designation: q, q:<m>, or table:<path>")
    parser.add_argument("--order", type=int, default=2)
    parser.add_argument("--xmin", type=float, default=1e3)
    parser.add_argument("--xmax", type=float, default=1e6)
    parser.add_argument("--points", type=int, default=25)
    args = parser.parse_args()

    field = parse_field(args.field)
    ratio = (args.xmax / args.xmin) ** (1.0 / max(args.points - 1, 1))
    grid = [args.xmin * ratio**i for i in range(args.points)]
    grid[-1] = args.xmax

    print(CSV_HEADER)
    for report in sweep(args.kind, field, args.order, grid):
        print(report.csv_row())


if __name__ == "__main__":
    main()
