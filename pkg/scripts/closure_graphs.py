#!/usr/bin/env python3
"""Emit the Hilbert-scheme orbit-closure graph for a range of sizes as dot.

Usage: python scripts/closure_graphs.py [max_n]
Pipe one block per n into graphviz to visualize, e.g.
    python scripts/closure_graphs.py 8 | csplit - '/^digraph/' '{*}'
"""

import sys

from cmhilb import HILBERT, closure_graph


def main():
    max_n = int(sys.argv[1]) if len(sys.argv) > 1 else 8
    for n in range(1, max_n + 1):
        print(closure_graph(n, HILBERT, cap=max(max_n, 30)).to_dot())


if __name__ == "__main__":
    main()
