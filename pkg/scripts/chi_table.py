#!/usr/bin/env python3
"""Print the polynomial invariant of every composition class of a given weight.

Usage: python scripts/chi_table.py --n 4 [--check]

With --check, each row is recomputed by the ordered-set-partition brute
force and compared.
"""

import argparse

from orbitopes.compositions import compositions_of
from orbitopes.invariants import chi, chi_bruteforce, to_monomial


def monomial_str(coeffs) -> str:
    terms = []
    for power, c in enumerate(coeffs):
        if not c:
            continue
        if power == 0:
            terms.append(f"{c}")
        elif power == 1:
            terms.append(f"{c}*t" if c != 1 else "t")
        else:
            terms.append(f"{c}*t^{power}" if c != 1 else f"t^{power}")
    return " + ".join(reversed(terms)) if terms else "0"


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n", type=int, required=True)
    parser.add_argument("--check", action="store_true")
    args = parser.parse_args()

    for alpha in compositions_of(args.n):
        poly = chi(alpha)
        row = f"{str(tuple(alpha.parts)):>18}  {monomial_str(to_monomial(poly))}"
        if args.check:
            verdict = "ok" if chi_bruteforce(alpha) == poly else "MISMATCH"
            row += f"  [{verdict}]"
        print(row)


if __name__ == "__main__":
    main()
