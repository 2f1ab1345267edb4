"""Check cyclic sieving from the closed forms for every stats class up to a polygon size."""

import argparse
import time

from ptolemy.count import stats_classes
from ptolemy.qpoly import csp_verify


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-n-gon", type=int, default=16)
    ap.add_argument("--mode", choices=("formula", "enumeration", "both"), default="formula")
    args = ap.parse_args()
    for n in range(3, args.max_n_gon + 1):
        start = time.perf_counter()
        reports = [csp_verify(n - 1, *s, mode=args.mode) for s in stats_classes(n - 1)]
        bad = [r for r in reports if not r.passed]
        print(f"{n:>3}-gon  classes={len(reports):>4}  failures={len(bad)}  {time.perf_counter() - start:.2f}s")
        for r in bad:
            print("   ", r.to_json())


if __name__ == "__main__":
    main()
