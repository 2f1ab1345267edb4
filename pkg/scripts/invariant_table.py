"""Tabulate rotation-invariant counts next to the generator tally for one polygon and order."""

import argparse
from collections import Counter

from ptolemy.core import stats
from ptolemy.count import count_invariant, stats_classes
from ptolemy.enumeration import enumerate_invariant


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-gon", type=int, default=12)
    ap.add_argument("--order", type=int, default=4)
    args = ap.parse_args()
    N, d = args.n_gon - 1, args.order
    tally = Counter(stats(A)[1:] for A in enumerate_invariant(N, d, check_injective=True))
    print(f"{'k':>3} {'l':>3} {'m':>3} {'formula':>8} {'generated':>10}")
    for s in stats_classes(N):
        v = count_invariant(N, *s, d)
        if v or tally[s]:
            print(f"{s[0]:>3} {s[1]:>3} {s[2]:>3} {v:>8} {tally[s]:>10}")
    print(f"total {sum(tally.values())}")


if __name__ == "__main__":
    main()
