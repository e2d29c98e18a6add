"""Side-by-side evaluation of the two readings of the averaging step.

A scan's grand total can be divided by the number of all multipliers or
by the number of nonzero multipliers; the two give different per-column
yardsticks.  An adjudication record reports both, exactly, next to the
quantities that are supposed to certify extraction quality, without
preferring either reading.  The searches then hunt for inputs where the
certified density fails, keeping "our extractor fell short" strictly
apart from "the density bound itself is wrong".
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import Iterator

from .groups import DivisorProfile, Element, GroupSequence, GroupSpec, window_middle_third
from .oracle import EXACT_SEARCH_LIMIT, max_sum_free
from .primes import is_prime
from .scanner import GroupExtraction, extract_sum_free_group, full_scan


@dataclass(frozen=True)
class AdjudicationRecord:
    """Both denominators, the divisor-range bound, and the verdict flags."""

    instance_id: str
    n: int
    s: int
    m: int
    profile: DivisorProfile
    expected_count_1: Fraction
    expected_count_2: Fraction
    mean_full_1: Fraction
    mean_full_2: Fraction
    mean_nonzero_1: Fraction
    mean_nonzero_2: Fraction
    divisor_range_bound: Fraction
    divisor_range_bound_limit: Fraction
    max_count_1: int
    max_count_2: int
    histogram_1: tuple[int, ...]
    histogram_2: tuple[int, ...]
    extraction: GroupExtraction
    full_mean_matches_expected_1: bool
    full_mean_matches_expected_2: bool
    some_column_beats_expected_1: bool
    extraction_beats_two_sevenths: bool


def divisor_range_bound(profile: DivisorProfile, n: int, s: int) -> Fraction:
    """Lower bound on the nonzero-column mean from the divisor range alone.

    Every entry of class d contributes d * n^(s-1) * (multiples of d in
    the middle third) to the grand total, which is at least
    min_divisor * floor(window/max_divisor) * n^(s-1) regardless of d.
    """
    w1 = window_middle_third(n)
    a = profile.min_divisor
    b = profile.max_divisor
    num = a * profile.total * (w1.size // b) * n ** (s - 1)
    return Fraction(num, n**s - 1)


def divisor_range_bound_limit(profile: DivisorProfile) -> Fraction:
    """Large-n limit of divisor_range_bound: min/(3 max) per entry."""
    return Fraction(profile.min_divisor * profile.total, 3 * profile.max_divisor)


def adjudicate(
    seq: GroupSequence,
    instance_id: str = "",
    *,
    workers: int = 1,
) -> AdjudicationRecord:
    """Scan exhaustively and lay out both readings next to the facts."""
    report = full_scan(seq, workers=workers)
    extraction = extract_sum_free_group(seq, report)
    profile = report.profile
    assert report.mean_full_1 is not None and report.mean_nonzero_1 is not None
    assert report.mean_full_2 is not None and report.mean_nonzero_2 is not None
    return AdjudicationRecord(
        instance_id=instance_id,
        n=report.n,
        s=report.s,
        m=report.m,
        profile=profile,
        expected_count_1=report.expected_count_1,
        expected_count_2=report.expected_count_2,
        mean_full_1=report.mean_full_1,
        mean_full_2=report.mean_full_2,
        mean_nonzero_1=report.mean_nonzero_1,
        mean_nonzero_2=report.mean_nonzero_2,
        divisor_range_bound=divisor_range_bound(profile, report.n, report.s),
        divisor_range_bound_limit=divisor_range_bound_limit(profile),
        max_count_1=report.best_count_1,
        max_count_2=report.best_count_2,
        histogram_1=report.histogram_1,
        histogram_2=report.histogram_2,
        extraction=extraction,
        full_mean_matches_expected_1=report.mean_full_1 == report.expected_count_1,
        full_mean_matches_expected_2=report.mean_full_2 == report.expected_count_2,
        some_column_beats_expected_1=report.best_count_1 > report.expected_count_1,
        extraction_beats_two_sevenths=extraction.beats_two_sevenths,
    )


@dataclass(frozen=True)
class CounterexampleQuery:
    """What to search: group, target length, enumeration mode, effort cap."""

    n: int
    s: int
    m: int
    mode: str  # "exhaustive" (all multisets up to length m) or "random"
    budget: int
    seed: int | None = None

    def __post_init__(self) -> None:
        if self.mode not in ("exhaustive", "random"):
            raise ValueError(f"unknown search mode {self.mode!r}")
        if self.m < 1:
            raise ValueError("target length must be at least 1")
        if self.budget < 1:
            raise ValueError("budget must be at least 1")
        if self.mode == "random" and self.seed is None:
            raise ValueError("random search requires a seed")


@dataclass(frozen=True)
class Finding:
    """One instance that fell at or below the certified density.

    extraction_below_bound says the window extractor failed to beat
    2m/7; max_below_bound says the true maximum itself fails, which
    would refute the 2m/7 guarantee outright.  The second is only ever
    claimed when the exact oracle ran (exact_max_size is set).
    """

    elements: tuple[Element, ...]
    m: int
    extraction_size: int
    exact_max_size: int | None
    extraction_below_bound: bool
    max_below_bound: bool


@dataclass(frozen=True)
class SearchResult:
    query: CounterexampleQuery
    instances: int
    oracle_checked: int
    complete: bool
    findings: tuple[Finding, ...]


def _multiset_count(q: int, m: int) -> int:
    return sum(math.comb(q + k - 1, k) for k in range(1, m + 1))


def _exhaustive_instances(spec: GroupSpec, m: int) -> Iterator[tuple[Element, ...]]:
    pool = [spec.coords_of(i) for i in range(1, spec.size)]
    for k in range(1, m + 1):
        yield from combinations_with_replacement(pool, k)


def _evaluate(spec: GroupSpec, elements: tuple[Element, ...]) -> Finding | None:
    seq = GroupSequence(spec, elements)
    extraction = extract_sum_free_group(seq)
    m = len(elements)
    ext_below = 7 * extraction.size <= 2 * m
    exact_size: int | None = None
    max_below = False
    if m <= EXACT_SEARCH_LIMIT:
        witness = max_sum_free(list(elements), add=spec.add)
        exact_size = witness.size
        max_below = 7 * exact_size <= 2 * m
    if ext_below or max_below:
        return Finding(
            elements=elements,
            m=m,
            extraction_size=extraction.size,
            exact_max_size=exact_size,
            extraction_below_bound=ext_below,
            max_below_bound=max_below,
        )
    return None


def counterexample_search(query: CounterexampleQuery, spec: GroupSpec | None = None) -> SearchResult:
    """Hunt for instances at or below the 2/7 density, per the query.

    Exhaustive mode enumerates every nonzero multiset up to the target
    length (refusing if that count exceeds the budget); random mode
    draws budget sequences of exactly the target length.
    """
    if spec is None:
        spec = GroupSpec(query.n, query.s)
    if (spec.n, spec.s) != (query.n, query.s):
        raise ValueError("group spec disagrees with the query")
    findings: list[Finding] = []
    checked = 0
    oracle_checked = 0

    if query.mode == "exhaustive":
        total = _multiset_count(spec.size - 1, query.m)
        if total > query.budget:
            raise ValueError(
                f"exhaustive search needs {total} instances, above the "
                f"budget {query.budget}"
            )
        for elements in _exhaustive_instances(spec, query.m):
            f = _evaluate(spec, elements)
            checked += 1
            if len(elements) <= EXACT_SEARCH_LIMIT:
                oracle_checked += 1
            if f is not None:
                findings.append(f)
        complete = True
    else:
        rng = random.Random(query.seed)
        for _ in range(query.budget):
            elements = tuple(spec.random_nonzero(rng) for _ in range(query.m))
            f = _evaluate(spec, elements)
            checked += 1
            if query.m <= EXACT_SEARCH_LIMIT:
                oracle_checked += 1
            if f is not None:
                findings.append(f)
        complete = False

    findings.sort(key=lambda f: (f.m, f.elements))
    return SearchResult(
        query=query,
        instances=checked,
        oracle_checked=oracle_checked,
        complete=complete,
        findings=tuple(findings),
    )


@dataclass(frozen=True)
class PrimeCaseTrial:
    m: int
    extraction_size: int
    beats_two_sevenths: bool
    nonzero_mean_matches_formula: bool


@dataclass(frozen=True)
class PrimeCaseReport:
    """Prime-modulus specialization: every gcd class is 1, the nonzero
    mean collapses to a closed form, and the window density carries 2/7."""

    p: int
    s: int
    trials: int
    seed: int
    window_ratio: Fraction
    window_ratio_ok: bool
    all_divisors_one: bool
    all_nonzero_means_match: bool
    all_extractions_beat: bool
    trial_results: tuple[PrimeCaseTrial, ...]


def prime_case_check(
    p: int,
    s: int,
    *,
    trials: int,
    seed: int,
    m_max: int = 30,
) -> PrimeCaseReport:
    """Random-sequence verification of the prime-modulus shortcuts."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if trials < 1:
        raise ValueError("at least one trial required")
    spec = GroupSpec(p, s)
    w1 = window_middle_third(p)
    ratio = Fraction(w1.size, p)
    rng = random.Random(seed)
    results: list[PrimeCaseTrial] = []
    divisors_one = True
    for _ in range(trials):
        m = rng.randint(1, m_max)
        seq = GroupSequence(spec, tuple(spec.random_nonzero(rng) for _ in range(m)))
        report = full_scan(seq)
        if report.profile.pairs != ((1, m),):
            divisors_one = False
        formula = Fraction(m * p ** (s - 1) * w1.size, p**s - 1)
        extraction = extract_sum_free_group(seq, report)
        results.append(
            PrimeCaseTrial(
                m=m,
                extraction_size=extraction.size,
                beats_two_sevenths=extraction.beats_two_sevenths,
                nonzero_mean_matches_formula=report.mean_nonzero_1 == formula,
            )
        )
    return PrimeCaseReport(
        p=p,
        s=s,
        trials=trials,
        seed=seed,
        window_ratio=ratio,
        window_ratio_ok=ratio >= Fraction(2, 7),
        all_divisors_one=divisors_one,
        all_nonzero_means_match=all(t.nonzero_mean_matches_formula for t in results),
        all_extractions_beat=all(t.beats_two_sevenths for t in results),
        trial_results=tuple(results),
    )
