"""Sum-free subset extraction for integer sequences.

Pipeline: embed the integers in a prime field F_p with p = 3k + 2 large
enough that distinct inputs stay distinct and no product wraps, scan all
multipliers x for the one pushing the most inputs into the sum-free
middle band (k, 2k+1], and pull those positions back out.  The counting
guarantees the winning column holds more than a third of the sequence.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .groups import Window, window_prime_target
from .oracle import is_sum_free
from .primes import is_prime, next_prime_2_mod_3

try:  # pragma: no cover - exercised implicitly by kernel dispatch
    import numba

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover
    numba = None
    HAVE_NUMBA = False


@dataclass(frozen=True)
class PrimeChoice:
    """A prime p = 3k + 2 exceeding twice the largest input magnitude."""

    p: int
    k: int
    bound: int

    def __post_init__(self) -> None:
        if self.p % 3 != 2:
            raise ValueError(f"{self.p} is not 2 mod 3")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k != (self.p - 2) // 3:
            raise ValueError(f"k={self.k} inconsistent with p={self.p}")
        if self.p <= self.bound:
            raise ValueError(f"p={self.p} does not exceed the bound {self.bound}")

    def target_window(self) -> Window:
        return window_prime_target(self.k)


@dataclass(frozen=True)
class ColumnSelection:
    """The winning multiplier x and which input positions it captures."""

    x: int
    hits: tuple[int, ...]
    count: int

    def __post_init__(self) -> None:
        if self.count != len(self.hits):
            raise ValueError("count disagrees with hit list")


def _require_nonzero(values: Sequence[int]) -> None:
    if not values:
        raise ValueError("input sequence is empty")
    for i, b in enumerate(values):
        if b == 0:
            raise ValueError(f"zero at position {i}: zeros are never sum-free")


def choose_prime(values: Sequence[int]) -> PrimeChoice:
    """Smallest prime p = 2 mod 3 with p > 2 * max |b|."""
    _require_nonzero(values)
    bound = 2 * max(abs(b) for b in values)
    p = next_prime_2_mod_3(bound)
    return PrimeChoice(p, (p - 2) // 3, bound)


def row_hit_count(b: int, choice: PrimeChoice) -> int:
    """Count multipliers x in [1, p) with x*b mod p inside the target band.

    Computed by direct enumeration.  Always equals k + 1: as x runs over
    the nonzero field elements, so does x*b.
    """
    p, k = choice.p, choice.k
    r = b % p
    if r == 0:
        raise ValueError(f"{b} vanishes mod {p}")
    total = 0
    for lo in range(1, p, 1 << 20):
        xs = np.arange(lo, min(lo + (1 << 20), p), dtype=np.int64)
        vals = xs * r % p
        total += int(((vals > k) & (vals <= 2 * k + 1)).sum())
    return total


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _scatter_hits(counts, inverses, k, p):  # pragma: no cover - jitted
        for i in range(inverses.shape[0]):
            r = inverses[i]
            for c in range(k + 1, 2 * k + 2):
                counts[r * c % p] += 1


def _column_counts(inverses: np.ndarray, k: int, p: int) -> np.ndarray:
    """counts[x] = number of inputs landing in the band under multiplier x."""
    counts = np.zeros(p, dtype=np.int32)
    if HAVE_NUMBA:
        _scatter_hits(counts, inverses, k, p)
        return counts
    cs = np.arange(k + 1, 2 * k + 2, dtype=np.int64)
    for r in inverses:
        counts += np.bincount(int(r) * cs % p, minlength=p).astype(np.int32)
    return counts


def _hits_for(values: Sequence[int], choice: PrimeChoice, x: int) -> list[int]:
    p, k = choice.p, choice.k
    return [i for i, b in enumerate(values) if k < x * (b % p) % p <= 2 * k + 1]


def best_column(
    values: Sequence[int],
    choice: PrimeChoice,
    sample: int | None = None,
    seed: int | None = None,
) -> ColumnSelection:
    """Multiplier with the most hits; ties go to the smallest x.

    With `sample`, only that many distinct random multipliers are
    examined (seed required); the result is then a lower bound, not
    necessarily the true best column.
    """
    _require_nonzero(values)
    p, k = choice.p, choice.k
    residues = [b % p for b in values]
    if any(r == 0 for r in residues):
        raise ValueError("some input vanishes mod p; prime too small")

    if sample is not None:
        if seed is None:
            raise ValueError("sampled column scan requires a seed")
        if sample < 1:
            raise ValueError("sample size must be positive")
        rng = random.Random(seed)
        xs = np.array(sorted(rng.sample(range(1, p), min(sample, p - 1))), dtype=np.int64)
        rs = np.array(residues, dtype=np.int64)
        vals = xs[:, None] * rs[None, :] % p
        counts = ((vals > k) & (vals <= 2 * k + 1)).sum(axis=1)
        best = int(np.argmax(counts))  # first max: xs ascending, smallest x
        x = int(xs[best])
    else:
        inverses = np.array([pow(r, p - 2, p) for r in residues], dtype=np.int64)
        counts = _column_counts(inverses, k, p)
        x = 1 + int(np.argmax(counts[1:]))

    hits = _hits_for(values, choice, x)
    return ColumnSelection(x, tuple(hits), len(hits))


@dataclass(frozen=True)
class IntegerExtraction:
    """Extraction outcome plus every verification the pipeline promises."""

    choice: PrimeChoice
    column: ColumnSelection
    subset: tuple[int, ...]
    injective: bool
    residues_in_window: bool
    subset_sum_free: bool
    size_bound_met: bool
    sampled: bool

    @property
    def indices(self) -> tuple[int, ...]:
        return self.column.hits

    @property
    def size(self) -> int:
        return self.column.count

    @property
    def verified(self) -> bool:
        return (
            self.injective
            and self.residues_in_window
            and self.subset_sum_free
            and self.size_bound_met
        )

    def to_record(self) -> dict:
        """The flat witness record emitted on the wire."""
        return {
            "schema": 1,
            "p": self.choice.p,
            "k": self.choice.k,
            "x": self.column.x,
            "indices": list(self.indices),
            "size": self.size,
            "verified": self.verified,
        }


def extract_sum_free_subset(
    values: Sequence[int],
    sample: int | None = None,
    seed: int | None = None,
) -> IntegerExtraction:
    """Full pipeline: prime, column scan, pullback, and verification.

    In the default exhaustive mode the result always carries more than a
    third of the input positions and verifies sum-free.
    """
    choice = choose_prime(values)
    column = best_column(values, choice, sample=sample, seed=seed)
    p, k, x = choice.p, choice.k, column.x
    subset = tuple(values[i] for i in column.hits)

    distinct = {b % p for b in set(values)}
    injective = len(distinct) == len(set(values))
    residues_ok = all(k < x * (b % p) % p <= 2 * k + 1 for b in subset)
    sum_free = is_sum_free(set(subset))
    bound_met = column.count >= len(values) // 3 + 1

    return IntegerExtraction(
        choice=choice,
        column=column,
        subset=subset,
        injective=injective,
        residues_in_window=residues_ok,
        subset_sum_free=sum_free,
        size_bound_met=bound_met,
        sampled=sample is not None,
    )


def parse_integer_lines(lines: Iterable[str]) -> list[int]:
    """One integer per line; blank lines and text after '#' are ignored."""
    out: list[int] = []
    for ln, raw in enumerate(lines, start=1):
        text = raw.split("#", 1)[0].strip()
        if not text:
            continue
        try:
            out.append(int(text))
        except ValueError:
            raise ValueError(f"line {ln}: {text!r} is not an integer") from None
    return out
