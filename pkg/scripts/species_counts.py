#!/usr/bin/env python3
"""Tabulate labeled class counts next to the generating-function expansion.

Usage: python scripts/species_counts.py [--max-n N]
"""

import argparse

from orbitopes.hopf_monoid import count_structures
from orbitopes.selftest import egf_counts


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--max-n", type=int, default=10, dest="max_n")
    args = parser.parse_args()

    expansion = egf_counts(args.max_n)
    print(f"{'n':>3}  {'count':>14}  {'egf coeff':>14}  match")
    for n in range(args.max_n + 1):
        count = count_structures(n)
        mark = "ok" if count == expansion[n] else "MISMATCH"
        print(f"{n:>3}  {count:>14}  {expansion[n]:>14}  {mark}")


if __name__ == "__main__":
    main()
