"""Diagrams per second for the recursive generator, against the closed-form total."""

import argparse
import time

from ptolemy.count import count_ptolemy, stats_classes
from ptolemy.enumeration import enumerate_all


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n-gon", type=int, default=11)
    args = ap.parse_args()
    for n in range(3, args.max_n_gon + 1):
        start = time.perf_counter()
        seen = sum(1 for _ in enumerate_all(n - 1))
        elapsed = time.perf_counter() - start
        expected = sum(count_ptolemy(n - 1, *s) for s in stats_classes(n - 1))
        rate = seen / elapsed if elapsed else float("inf")
        print(f"{n:>3}-gon  {seen:>9} diagrams  expected {expected:>9}  {rate:>12.0f}/s")


if __name__ == "__main__":
    main()
