"""Exhaustive multiplier scans over Z_n^s, exact expectations, extraction.

For every multiplier x the scan counts how many sequence entries b land
in each of the two sum-free residue windows under x . b.  The kernel
never materializes the multiplier tuples: dot products over the whole
group are built one coordinate at a time as outer sums, so the work is
O(n^s) cheap vector passes per sequence entry.  All counting is integer
exact, and reports merge block results in a fixed order, so any worker
count produces the identical report.
"""

from __future__ import annotations

import random
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .groups import (
    DivisorProfile,
    Element,
    GroupSequence,
    Window,
    window_middle_third,
    window_sixth_bands,
)
from .oracle import is_sum_free

#: Exhaustive scans refuse groups larger than this unless sampling.
DEFAULT_SCAN_CAP = 10**7


def divisor_profile(seq: GroupSequence) -> DivisorProfile:
    """Multiplicity of each gcd class in the sequence."""
    counts = Counter(seq.spec.gcd_class(b) for b in seq)
    return DivisorProfile(tuple(sorted(counts.items())))


def expected_counts(profile: DivisorProfile, n: int) -> tuple[Fraction, Fraction]:
    """Mean hits per multiplier for each window, exactly.

    An entry of gcd class d spreads its n^s dot products uniformly over
    the subgroup of multiples of d, so it contributes
    (multiples of d in the window) / (n/d) to the mean.  Rank cancels.
    """
    w1 = window_middle_third(n)
    w2 = window_sixth_bands(n)
    m1 = Fraction(0)
    m2 = Fraction(0)
    for d, mult in profile.pairs:
        m1 += mult * Fraction(w1.count_multiples(d) * d, n)
        m2 += mult * Fraction(w2.count_multiples(d) * d, n)
    return m1, m2


@dataclass(frozen=True)
class InequalityRow:
    """One (modulus, divisor) cell of the weighted window-density check."""

    n: int
    d: int
    ratio_1: Fraction
    ratio_2: Fraction
    lhs: Fraction
    passes: bool


def weighted_inequality_sweep(max_n: int) -> list[InequalityRow]:
    """Check 4/7 * r1 + 3/7 * r2 >= 2/7 for every modulus and divisor.

    r_j is the density of window j members among the multiples of d.
    This is the inequality that makes the 2/7 extraction bound work for
    arbitrary composition of gcd classes.
    """
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    rows: list[InequalityRow] = []
    for n in range(2, max_n + 1):
        w1 = window_middle_third(n)
        w2 = window_sixth_bands(n)
        for d in range(1, n):
            if n % d != 0:
                continue
            r1 = Fraction(w1.count_multiples(d), n // d)
            r2 = Fraction(w2.count_multiples(d), n // d)
            lhs = Fraction(4, 7) * r1 + Fraction(3, 7) * r2
            rows.append(InequalityRow(n, d, r1, r2, lhs, lhs >= Fraction(2, 7)))
    return rows


@dataclass(frozen=True)
class ScanReport:
    """Everything one multiplier scan measured.  Exact integers/rationals.

    Exhaustive reports cover all n^s columns (the zero multiplier
    included; it never hits a window).  Sampled reports cover
    sample_size distinct nonzero multipliers and leave the full-domain
    means unset.
    """

    n: int
    s: int
    m: int
    exhaustive: bool
    workers: int = field(compare=False)
    sample_size: int | None
    seed: int | None
    profile: DivisorProfile
    expected_count_1: Fraction
    expected_count_2: Fraction
    grand_total_1: int
    grand_total_2: int
    mean_full_1: Fraction | None
    mean_full_2: Fraction | None
    mean_nonzero_1: Fraction | None
    mean_nonzero_2: Fraction | None
    sample_mean_1: Fraction | None
    sample_mean_2: Fraction | None
    row_totals_1: tuple[int, ...]
    row_totals_2: tuple[int, ...]
    best_x_1: Element
    best_count_1: int
    best_x_2: Element
    best_count_2: int
    histogram_1: tuple[int, ...]
    histogram_2: tuple[int, ...]
    zero_column_count_1: int | None
    zero_column_count_2: int | None


@dataclass(frozen=True)
class _BlockResult:
    base: int
    grand_1: int
    grand_2: int
    hist_1: np.ndarray
    hist_2: np.ndarray
    best_idx_1: int
    best_count_1: int
    best_idx_2: int
    best_count_2: int
    row_totals_1: np.ndarray
    row_totals_2: np.ndarray
    zero_count_1: int | None
    zero_count_2: int | None


def _coord_table(b_j: int, n: int) -> np.ndarray:
    return (np.arange(n, dtype=np.int64) * b_j % n).astype(np.int32)


def _outer_sum(tables: list[np.ndarray], n: int) -> np.ndarray:
    """Dot-product contributions of several coordinates, lexicographic order."""
    f = tables[0]
    for t in tables[1:]:
        f = np.add.outer(f, t).reshape(-1)
        np.remainder(f, n, out=f)
    return f


def _scan_block(
    d0: int,
    d1: int,
    elements: Sequence[Element],
    n: int,
    s: int,
    lut1: np.ndarray,
    lut2: np.ndarray,
) -> _BlockResult:
    m = len(elements)
    low_len = n ** (s - 1)
    block_len = (d1 - d0) * low_len
    base = d0 * low_len
    counts1 = np.zeros(block_len, dtype=np.int32)
    counts2 = np.zeros(block_len, dtype=np.int32)
    rt1 = np.zeros(m, dtype=np.int64)
    rt2 = np.zeros(m, dtype=np.int64)
    digits = np.arange(d0, d1, dtype=np.int64)
    for ei, b in enumerate(elements):
        dv = (digits * b[0] % n).astype(np.int32)
        if s == 1:
            seg = dv
        else:
            low = _outer_sum([_coord_table(c, n) for c in b[1:]], n)
            seg = np.add.outer(dv, low).reshape(-1)
            np.remainder(seg, n, out=seg)
        h1 = lut1[seg]
        h2 = lut2[seg]
        counts1 += h1
        counts2 += h2
        rt1[ei] = int(h1.sum())
        rt2[ei] = int(h2.sum())
    i1 = int(np.argmax(counts1))
    i2 = int(np.argmax(counts2))
    zero1 = int(counts1[0]) if base == 0 else None
    zero2 = int(counts2[0]) if base == 0 else None
    return _BlockResult(
        base=base,
        grand_1=int(counts1.sum(dtype=np.int64)),
        grand_2=int(counts2.sum(dtype=np.int64)),
        hist_1=np.bincount(counts1, minlength=m + 1),
        hist_2=np.bincount(counts2, minlength=m + 1),
        best_idx_1=base + i1,
        best_count_1=int(counts1[i1]),
        best_idx_2=base + i2,
        best_count_2=int(counts2[i2]),
        row_totals_1=rt1,
        row_totals_2=rt2,
        zero_count_1=zero1,
        zero_count_2=zero2,
    )


def _blocks(n: int, workers: int) -> list[tuple[int, int]]:
    nblocks = min(n, max(2, 2 * workers))
    bounds = [round(i * n / nblocks) for i in range(nblocks + 1)]
    return [(a, b) for a, b in zip(bounds, bounds[1:]) if a < b]


def _merge_best(results: list[_BlockResult], which: int) -> tuple[int, int]:
    best_count, best_idx = -1, -1
    for r in results:
        c = r.best_count_1 if which == 1 else r.best_count_2
        i = r.best_idx_1 if which == 1 else r.best_idx_2
        if c > best_count or (c == best_count and i < best_idx):
            best_count, best_idx = c, i
    return best_count, best_idx


def full_scan(
    seq: GroupSequence,
    *,
    workers: int = 1,
    cap: int = DEFAULT_SCAN_CAP,
    sample: int | None = None,
    seed: int | None = None,
) -> ScanReport:
    """Scan every multiplier (or a seeded sample) and report exact counts."""
    m = len(seq)
    if m == 0:
        raise ValueError("cannot scan an empty sequence")
    if workers < 1:
        raise ValueError("workers must be at least 1")
    spec = seq.spec
    n, s = spec.n, spec.s
    w1 = window_middle_third(n)
    w2 = window_sixth_bands(n)
    profile = divisor_profile(seq)
    m1, m2 = expected_counts(profile, n)

    if sample is not None:
        return _sampled_scan(seq, w1, w2, profile, m1, m2, sample, seed, workers)

    if spec.size > cap:
        raise ValueError(
            f"group has {spec.size} elements, above the exhaustive scan cap "
            f"{cap}; pass sample= for a sampled scan"
        )

    lut1 = w1.bitmap()
    lut2 = w2.bitmap()
    blocks = _blocks(n, workers)
    if workers == 1:
        results = [_scan_block(a, b, seq.elements, n, s, lut1, lut2) for a, b in blocks]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(
                pool.map(
                    lambda ab: _scan_block(ab[0], ab[1], seq.elements, n, s, lut1, lut2),
                    blocks,
                )
            )

    size = spec.size
    grand1 = sum(r.grand_1 for r in results)
    grand2 = sum(r.grand_2 for r in results)
    hist1 = np.zeros(m + 1, dtype=np.int64)
    hist2 = np.zeros(m + 1, dtype=np.int64)
    rt1 = np.zeros(m, dtype=np.int64)
    rt2 = np.zeros(m, dtype=np.int64)
    for r in results:
        hist1 += r.hist_1
        hist2 += r.hist_2
        rt1 += r.row_totals_1
        rt2 += r.row_totals_2
    best_count_1, best_idx_1 = _merge_best(results, 1)
    best_count_2, best_idx_2 = _merge_best(results, 2)
    zero1 = next(r.zero_count_1 for r in results if r.zero_count_1 is not None)
    zero2 = next(r.zero_count_2 for r in results if r.zero_count_2 is not None)

    return ScanReport(
        n=n,
        s=s,
        m=m,
        exhaustive=True,
        workers=workers,
        sample_size=None,
        seed=None,
        profile=profile,
        expected_count_1=m1,
        expected_count_2=m2,
        grand_total_1=grand1,
        grand_total_2=grand2,
        mean_full_1=Fraction(grand1, size),
        mean_full_2=Fraction(grand2, size),
        mean_nonzero_1=Fraction(grand1, size - 1),
        mean_nonzero_2=Fraction(grand2, size - 1),
        sample_mean_1=None,
        sample_mean_2=None,
        row_totals_1=tuple(int(v) for v in rt1),
        row_totals_2=tuple(int(v) for v in rt2),
        best_x_1=spec.coords_of(best_idx_1),
        best_count_1=best_count_1,
        best_x_2=spec.coords_of(best_idx_2),
        best_count_2=best_count_2,
        histogram_1=tuple(int(v) for v in hist1),
        histogram_2=tuple(int(v) for v in hist2),
        zero_column_count_1=zero1,
        zero_column_count_2=zero2,
    )


def _sampled_scan(
    seq: GroupSequence,
    w1: Window,
    w2: Window,
    profile: DivisorProfile,
    m1: Fraction,
    m2: Fraction,
    sample: int,
    seed: int | None,
    workers: int,
) -> ScanReport:
    if seed is None:
        raise ValueError("sampled scans require a seed")
    if sample < 1:
        raise ValueError("sample size must be positive")
    spec = seq.spec
    n, s, m = spec.n, spec.s, len(seq)
    size = spec.size
    count = min(sample, size - 1)
    rng = random.Random(seed)
    # Distinct nonzero multipliers, ascending so first-max = smallest.
    idxs = sorted(rng.sample(range(1, size), count))
    coords = np.array([spec.coords_of(i) for i in idxs], dtype=np.int64)
    bmat = np.array(seq.elements, dtype=np.int64)
    lut1 = w1.bitmap()
    lut2 = w2.bitmap()
    counts1 = np.zeros(count, dtype=np.int64)
    counts2 = np.zeros(count, dtype=np.int64)
    rt1 = np.zeros(m, dtype=np.int64)
    rt2 = np.zeros(m, dtype=np.int64)
    chunk = max(1, 10_000_000 // m)
    for lo in range(0, count, chunk):
        dots = coords[lo : lo + chunk] @ bmat.T % n
        h1 = lut1[dots]
        h2 = lut2[dots]
        counts1[lo : lo + chunk] = h1.sum(axis=1, dtype=np.int64)
        counts2[lo : lo + chunk] = h2.sum(axis=1, dtype=np.int64)
        rt1 += h1.sum(axis=0, dtype=np.int64)
        rt2 += h2.sum(axis=0, dtype=np.int64)
    i1 = int(np.argmax(counts1))
    i2 = int(np.argmax(counts2))
    grand1 = int(counts1.sum())
    grand2 = int(counts2.sum())
    return ScanReport(
        n=n,
        s=s,
        m=m,
        exhaustive=False,
        workers=workers,
        sample_size=count,
        seed=seed,
        profile=profile,
        expected_count_1=m1,
        expected_count_2=m2,
        grand_total_1=grand1,
        grand_total_2=grand2,
        mean_full_1=None,
        mean_full_2=None,
        mean_nonzero_1=None,
        mean_nonzero_2=None,
        sample_mean_1=Fraction(grand1, count),
        sample_mean_2=Fraction(grand2, count),
        row_totals_1=tuple(int(v) for v in rt1),
        row_totals_2=tuple(int(v) for v in rt2),
        best_x_1=spec.coords_of(idxs[i1]),
        best_count_1=int(counts1[i1]),
        best_x_2=spec.coords_of(idxs[i2]),
        best_count_2=int(counts2[i2]),
        histogram_1=tuple(int(v) for v in np.bincount(counts1, minlength=m + 1)),
        histogram_2=tuple(int(v) for v in np.bincount(counts2, minlength=m + 1)),
        zero_column_count_1=None,
        zero_column_count_2=None,
    )


def verify_report(report: ScanReport, seq: GroupSequence) -> list[str]:
    """Internal consistency checks; returns human-readable violations.

    For exhaustive scans the row totals and the full-domain mean are
    forced by the uniform-attainment structure, so any mismatch means a
    broken kernel, not an interesting input.
    """
    problems: list[str] = []
    spec = seq.spec
    n, s = spec.n, spec.s
    w1 = window_middle_third(n)
    w2 = window_sixth_bands(n)
    if report.exhaustive:
        for i, b in enumerate(seq):
            d = spec.gcd_class(b)
            want1 = d * n ** (s - 1) * w1.count_multiples(d)
            want2 = d * n ** (s - 1) * w2.count_multiples(d)
            if report.row_totals_1[i] != want1:
                problems.append(f"row {i}: window-1 total {report.row_totals_1[i]} != {want1}")
            if report.row_totals_2[i] != want2:
                problems.append(f"row {i}: window-2 total {report.row_totals_2[i]} != {want2}")
        if report.mean_full_1 != report.expected_count_1:
            problems.append("full-domain mean disagrees with the expected count (window 1)")
        if report.mean_full_2 != report.expected_count_2:
            problems.append("full-domain mean disagrees with the expected count (window 2)")
        if report.zero_column_count_1 != 0 or report.zero_column_count_2 != 0:
            problems.append("zero multiplier shows window hits")
    for which, best, hist in (
        (1, report.best_count_1, report.histogram_1),
        (2, report.best_count_2, report.histogram_2),
    ):
        top = max(i for i, v in enumerate(hist) if v) if any(hist) else 0
        if best != top:
            problems.append(f"window-{which} best count {best} != histogram maximum {top}")
    return problems


@dataclass(frozen=True)
class GroupExtraction:
    """Positions pulled back from the best window column, verified."""

    multiplier: Element
    window_index: int
    indices: tuple[int, ...]
    size: int
    verified_sum_free: bool
    beats_two_sevenths: bool


def extract_sum_free_group(
    seq: GroupSequence,
    report: ScanReport | None = None,
    *,
    workers: int = 1,
    cap: int = DEFAULT_SCAN_CAP,
    sample: int | None = None,
    seed: int | None = None,
) -> GroupExtraction:
    """Pick the better of the two windows' best columns and pull back.

    Ties prefer the middle-third window.  The pulled-back subsequence is
    re-verified sum-free with the oracle, and the 7 * size > 2 * m flag
    records whether this instance beats the guaranteed density.
    """
    if report is None:
        report = full_scan(seq, workers=workers, cap=cap, sample=sample, seed=seed)
    spec = seq.spec
    if report.best_count_1 >= report.best_count_2:
        which, x = 1, report.best_x_1
        window = window_middle_third(spec.n)
        expect = report.best_count_1
    else:
        which, x = 2, report.best_x_2
        window = window_sixth_bands(spec.n)
        expect = report.best_count_2
    indices = tuple(
        i for i, b in enumerate(seq) if window.contains(spec.dot(x, b))
    )
    if len(indices) != expect:
        raise RuntimeError(
            f"pullback found {len(indices)} positions, scan promised {expect}"
        )
    values = {tuple(seq.elements[i]) for i in indices}
    ok = is_sum_free(values, add=spec.add)
    return GroupExtraction(
        multiplier=x,
        window_index=which,
        indices=indices,
        size=len(indices),
        verified_sum_free=ok,
        beats_two_sevenths=7 * len(indices) > 2 * len(seq),
    )
