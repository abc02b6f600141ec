#!/usr/bin/env python3
"""Sweep truncation heights and print the degree of (0,0,1).

The complex is locally infinite, so the degree grows without bound as the
height increases; this script shows the desk-scale growth.
"""

import argparse

from surfcomplex.toruscomplex import canonicalize, enumerate_vertices, s1_edge


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-height", type=int, default=10)
    parser.add_argument("--vertex", default="0,0,1", help="comma-separated coordinates")
    args = parser.parse_args()

    target = canonicalize(tuple(int(p) for p in args.vertex.split(",")))
    print(f"height  classes  degree({target.label})")
    for h in range(1, args.max_height + 1):
        vs = enumerate_vertices(3, h)
        deg = sum(1 for u in vs if u != target and s1_edge(u, target))
        print(f"{h:6d}  {len(vs):7d}  {deg:6d}")


if __name__ == "__main__":
    main()
