#!/usr/bin/env python3
"""Exploratory evidence sweeps for the two open questions.

Usage:
    python scripts/explore_conjectures.py [--max-m M] [--jobs N]

Part 1: booksize of every m-edge graph with spectral radius >= sqrt(m) that
is not complete bipartite, against the m^(1/4)/12 floor and the conjectured
c*sqrt(m) growth.

Part 2: the general odd-girth extremal conjecture for k = 1, 2, 3 over odd m
(k = 1 and k = 2 reproduce the proved theorems; k = 3 is open territory).
"""

import argparse
import math

from specbound import certify


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-m", type=int, default=9)
    ap.add_argument("--jobs", type=int, default=1)
    args = ap.parse_args()

    print("== booksize survey ==")
    print(f"{'m':>3} {'candidates':>10} {'min bk':>7} {'bk/sqrt(m)':>11} "
          f"{'floor':>8}")
    for m in range(3, args.max_m + 1):
        r = certify.explore_booksize(m, args.jobs)
        ratio = "-" if not r.rows else f"{r.min_ratio:.4f}"
        print(f"{m:>3} {len(r.rows):>10} {r.min_booksize:>7} {ratio:>11} "
              f"{r.nikiforov_floor:>8.4f}"
              + ("" if r.nikiforov_ok else "  ** below floor **"))

    print()
    print("== odd-girth extremal conjecture ==")
    print(f"{'k':>2} {'m':>3} {'classes':>8} {'max lambda':>12} "
          f"{'lambda(S)':>12} verdict")
    for k in (1, 2, 3):
        for m in range(2 * k + 3, args.max_m + 1, 2):
            r = certify.certify_conj51(m, k, args.jobs)
            print(f"{k:>2} {m:>3} {r.graphs_examined:>8} "
                  f"{r.max_lambda:>12.8f} {r.bound:>12.8f} {r.verdict}")


if __name__ == "__main__":
    main()
