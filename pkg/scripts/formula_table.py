"""Tabulate C(K_j; K_i) three ways: OR-power search, edge partition, explicit design.

All three should equal max(1, ceil(log_i j)). Prints one row per (i, j) with the
values and the seconds each method took, then a count of disagreements.

    python scripts/formula_table.py --max-i 4 --max-j 32
"""

from __future__ import annotations

import argparse
import sys
import time

from homtool import Budget, hom_complexity
from homtool.complexity import ceil_log
from homtool.decompose import decompose_complete
from homtool.generators import complete


def timed(fn):
    start = time.perf_counter()
    value = fn()
    return value, time.perf_counter() - start


def main(argv: list[str] | None = None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-i", type=int, default=4)
    ap.add_argument("--max-j", type=int, default=32)
    args = ap.parse_args(argv)

    budget = Budget(partition_edges=args.max_j * (args.max_j - 1) // 2)
    bad = 0
    print(f"{'i':>2} {'j':>3} {'formula':>7} {'orpower':>8} {'partition':>9} {'design':>6}  seconds")
    for i in range(2, args.max_i + 1):
        ki = complete(i)
        for j in range(2, args.max_j + 1):
            kj = complete(j)
            want = max(1, ceil_log(j, i))
            orp, t1 = timed(lambda: hom_complexity(kj, ki, "orpower", budget).value)
            part, t2 = timed(lambda: hom_complexity(kj, ki, "partition", budget).value)
            design, t3 = timed(lambda: len(decompose_complete(j, i).pieces))
            mark = "" if orp == part == design == want else "  MISMATCH"
            bad += bool(mark)
            print(f"{i:>2} {j:>3} {want:>7} {orp:>8} {part:>9} {design:>6}  "
                  f"{t1:.3f}/{t2:.3f}/{t3:.3f}{mark}")
    print(f"{bad} disagreement(s)")
    return bad


if __name__ == "__main__":
    sys.exit(main())
