"""Print Tev for a grid of (g, r, d) by all three methods and flag disagreements.

    python scripts/cross_check_grid.py --r 1 2 3 --max-g 6
"""

import argparse
import time

from tevrsk.ltab import tev_ltab
from tevrsk.params import Params, is_valid
from tevrsk.schubert import tev_schubert
from tevrsk.words import tev_words


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--r", type=int, nargs="+", default=[1, 2, 3])
    ap.add_argument("--max-g", type=int, default=6)
    ap.add_argument("--extra", type=int, default=2, help="d runs up to r*(g+extra)")
    args = ap.parse_args()

    print(f"{'g':>3} {'r':>3} {'d':>3} {'n':>4} {'words':>8} {'ltab':>8} {'schubert':>9}  secs")
    disagreements = 0
    for r in args.r:
        for g in range(args.max_g + 1):
            for d in range(r, r * (g + args.extra) + 1, r):
                if not is_valid(g, r, d):
                    continue
                p = Params(g, r, d)
                t = time.perf_counter()
                vals = tev_words(p), tev_ltab(p), tev_schubert(p)
                flag = "" if len(set(vals)) == 1 else "  <-- MISMATCH"
                disagreements += bool(flag)
                print(f"{g:>3} {r:>3} {d:>3} {p.n:>4} {vals[0]:>8} {vals[1]:>8} {vals[2]:>9}  "
                      f"{time.perf_counter() - t:.2f}{flag}")
    print(f"\n{disagreements} disagreement(s)")


if __name__ == "__main__":
    main()
