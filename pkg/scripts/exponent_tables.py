#!/usr/bin/env python3
"""Print the exponent table of every triangular size up to a bound.

Usage: python scripts/exponent_tables.py [max_m]
"""

import sys

from cmhilb import enumerate_partitions, exponent_string, exponents


def main():
    max_m = int(sys.argv[1]) if len(sys.argv) > 1 else 4
    for m in range(1, max_m + 1):
        n = m * (m + 1) // 2
        print(f"== n = {n} (m = {m}) ==")
        rows = [(lam, exponents(lam)) for lam in enumerate_partitions(n)]
        width = max(len(str(lam)) for lam, _ in rows)
        for lam, exps in rows:
            print(f"{str(lam):<{width}} | {exponent_string(exps)}")
        print()


if __name__ == "__main__":
    main()
