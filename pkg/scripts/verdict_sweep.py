#!/usr/bin/env python3
"""Tally surface-complex verdicts over a grid of Seifert invariants."""

import argparse
import math
from collections import Counter
from itertools import combinations_with_replacement

from surfcomplex.seifert import SeifertInvariants, classify_surface_complex


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-genus", type=int, default=2)
    parser.add_argument("--max-fibers", type=int, default=4)
    parser.add_argument("--max-alpha", type=int, default=6)
    parser.add_argument("--max-b", type=int, default=3)
    args = parser.parse_args()

    pairs = [
        (a, b)
        for a in range(2, args.max_alpha + 1)
        for b in range(1, a)
        if math.gcd(a, b) == 1
    ]
    tally = Counter()
    total = 0
    for g in range(args.max_genus + 1):
        for b in range(-args.max_b, args.max_b + 1):
            for k in range(args.max_fibers + 1):
                for fibers in combinations_with_replacement(pairs, k):
                    report = classify_surface_complex(SeifertInvariants(g, b, fibers))
                    tally[report.verdict.value] += 1
                    total += 1
    width = max(len(k) for k in tally)
    for verdict, count in sorted(tally.items(), key=lambda kv: -kv[1]):
        print(f"{verdict:<{width}}  {count:7d}  ({count / total:.1%})")
    print(f"{'total':<{width}}  {total:7d}")


if __name__ == "__main__":
    main()
