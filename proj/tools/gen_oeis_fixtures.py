#!/usr/bin/env python3
"""Write offline OEIS b-files used by `walls crosscheck` when oeis.org is unreachable.

Terms come from each sequence's standard formula. A213863 has no closed form,
so its terms are produced by a small recurrence written here independently of
the C++ tables.
"""

import argparse
from functools import lru_cache
from math import comb, factorial
from pathlib import Path


def double_factorial(m):
    r = 1
    while m > 1:
        r *= m
        m -= 2
    return r


def catalan(n):
    return comb(2 * n, n) // (n + 1)


def a122649(n):
    return double_factorial(2 * n + 1) - double_factorial(2 * n)


def a000531(n):
    return factorial(2 * n + 1) // (2 * factorial(n) ** 2) - 2 ** (2 * n - 1)


def a213863_terms(last):
    # Column recurrence: row n is built left to right from row n-1.
    prev = []
    diag = []
    for n in range(last + 1):
        row = [double_factorial(2 * n - 1)]
        for k in range(1, n + 1):
            above = prev[k] if k < len(prev) else 0
            row.append(row[k - 1] + (2 * n + k - 1) * above)
        diag.append(row[n])
        prev = row
    return diag


SEQUENCES = {
    "A000108": (0, 100, catalan),
    "A122649": (1, 100, a122649),
    "A000531": (1, 100, a000531),
}


def write_bfile(path, offset, values):
    with open(path, "w", encoding="ascii") as out:
        for i, v in enumerate(values):
            out.write(f"{offset + i} {v}\n")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path(__file__).resolve().parent.parent / "data" / "oeis")
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for seq_id, (offset, last, fn) in SEQUENCES.items():
        write_bfile(args.out / f"b{seq_id[1:]}.txt", offset, [fn(n) for n in range(offset, last + 1)])
    diag = a213863_terms(60)
    write_bfile(args.out / "b213863.txt", 1, diag[1:])


if __name__ == "__main__":
    main()
