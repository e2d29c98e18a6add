#!/usr/bin/env python3
"""
Integer extraction, step by step: pick a prime p = 3k+2 above twice the
largest magnitude, map each input b to the residues x*b mod p over all
columns x, and keep the inputs landing in the window (k, 2k+1] for the
fullest column.  Pigeonhole guarantees that column holds more than a
third of the inputs.

Usage: python demo_integer_extraction.py
"""

import random

from sumfreelab.integers import (
    best_column,
    choose_prime,
    extract_sum_free_subset,
    row_hit_count,
)
from sumfreelab.oracle import is_sum_free

random.seed(2024)

BAR = "=" * 78


def main():
    values = [9, -4, 27, 5, -13, 8, 40, 2]
    choice = choose_prime(values)
    lo, hi = choice.k, 2 * choice.k + 1
    print(BAR)
    print("  EXP 1: Full residue table for one small instance")
    print(BAR)
    print(f"  input {values}")
    print(f"  p={choice.p}  k={choice.k}  window ({lo}, {hi}]")
    header = "  " + f"{'x':>4} |" + "".join(f"{b:>5}" for b in values)
    print(header)
    print("  " + "-" * (len(header) - 2))
    for x in range(1, 13):
        marks = ["  in " if lo < (x * b) % choice.p <= hi else "   . "
                 for b in values]
        print(f"  {x:>4} |" + "".join(marks))
    print(f"  ... ({choice.p - 13} more columns)")

    print()
    print(BAR)
    print("  EXP 2: Every row hits the window exactly k+1 times")
    print(BAR)
    for b in values:
        n_hits = row_hit_count(b, choice)
        print(f"  b={b:>4}: {n_hits} window hits (k+1 = {choice.k + 1})")
        assert n_hits == choice.k + 1

    print()
    print(BAR)
    print("  EXP 3: Best column and the extracted subset")
    print(BAR)
    col = best_column(values, choice)
    ex = extract_sum_free_subset(values)
    print(f"  best column x={col.x} captures {col.count} of {len(values)} inputs")
    print(f"  extracted indices {list(ex.indices)} -> values {list(ex.subset)}")
    print(f"  verified sum-free: {ex.verified}   size bound n//3+1 = {len(values)//3 + 1}")
    assert ex.verified and is_sum_free(ex.subset)

    print()
    print(BAR)
    print("  EXP 4: Batch statistics over random instances")
    print(BAR)
    print(f"  {'m':>4} {'p':>9} {'kept':>5} {'ratio':>7}")
    for _ in range(10):
        m = random.randint(6, 24)
        vals = [random.choice([-1, 1]) * random.randint(1, 10**6) for _ in range(m)]
        ex = extract_sum_free_subset(vals)
        print(f"  {m:>4} {ex.choice.p:>9} {ex.size:>5} {ex.size / m:>7.3f}")
        assert ex.size > m // 3

    print()
    print("  Sampled mode (for huge p): seeded column subsample, same contract")
    vals = [random.randint(1, 10**6) for _ in range(20)]
    ex = extract_sum_free_subset(vals, sample=500, seed=11)
    print(f"  sampled extraction kept {ex.size}/20, verified={ex.verified}")


if __name__ == "__main__":
    main()
