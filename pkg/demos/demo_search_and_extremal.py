#!/usr/bin/env python3
"""
Hunting for counterexamples, and why none show up

Usage: python demo_search_and_extremal.py
"""

from fractions import Fraction

from sumfreelab.adjudicate import (
    CounterexampleQuery,
    counterexample_search,
    prime_case_check,
)
from sumfreelab.extremal import density, rhemtulla_street_bound, tightness_instance
from sumfreelab.primes import is_prime
from sumfreelab.scanner import weighted_inequality_sweep

BAR = "=" * 78


def main():
    print(BAR)
    print("  EXP 1: Exhaustive counterexample search, small groups")
    print(BAR)
    print(f"  {'n':>4} {'m<=':>4} {'instances':>10} {'oracle':>7} {'findings':>9}")
    for n, m in ((5, 5), (6, 5), (7, 5), (8, 4), (9, 4)):
        q = CounterexampleQuery(n=n, s=1, m=m, mode="exhaustive", budget=10**6)
        res = counterexample_search(q)
        assert res.complete and res.findings == ()
        print(f"  {n:>4} {m:>4} {res.instances:>10} {res.oracle_checked:>7}"
              f" {len(res.findings):>9}")

    print()
    print(BAR)
    print("  EXP 2: Random probing with a fixed seed is reproducible")
    print(BAR)
    q = CounterexampleQuery(n=10, s=2, m=12, mode="random", budget=400, seed=17)
    first = counterexample_search(q)
    second = counterexample_search(q)
    assert first == second
    print(f"  400 random Z_10^2 sequences, findings: {len(first.findings)} (twice)")

    print()
    print(BAR)
    print("  EXP 3: The weighted window inequality never dips below 2/7")
    print(BAR)
    rows = weighted_inequality_sweep(400)
    worst = min(rows, key=lambda r: r.lhs)
    ties = sum(1 for r in rows if r.lhs == Fraction(2, 7))
    print(f"  rows checked: {len(rows)}")
    print(f"  minimum lhs:  {worst.lhs} at (n={worst.n}, d={worst.d})")
    print(f"  rows exactly at 2/7: {ties}")
    assert all(r.passes for r in rows)

    print()
    print(BAR)
    print("  EXP 4: Extremal sizes for Z_p, p = 1 mod 3, and the Z_7 wall")
    print(BAR)
    print(f"  {'p':>4} {'bound':>6} {'density':>10}")
    for p in range(7, 100):
        if not (is_prime(p) and p % 3 == 1):
            continue
        b = rhemtulla_street_bound(p, 1)
        print(f"  {p:>4} {b:>6} {str(density(p, 1)):>10}")
    rep = tightness_instance()
    print(f"\n  Z_7 nonzero elements: oracle max {rep.oracle_max}, bound {rep.bound},"
          f" (2/7)(m+1) = {rep.two_sevenths_of_m_plus_1}, matched: {rep.matched}")
    assert rep.matched

    print()
    print(BAR)
    print("  EXP 5: Prime moduli p = 2 mod 3 sit exactly on the guarantee")
    print(BAR)
    for p, s in ((5, 1), (11, 1), (11, 2), (17, 1)):
        rep = prime_case_check(p, s, trials=40, seed=3)
        print(f"  p={p:>3} s={s}: window ratio {str(rep.window_ratio):>6}, "
              f"{rep.trials} trials, all above 2m/7: {rep.all_extractions_beat}")
        assert rep.all_extractions_beat


if __name__ == "__main__":
    main()
