"""Frequency-shift analysis of frequent patterns across a position window.

For a pattern occurring for the i-th time at position p in a database of n
transactions, the statistics of that occurrence ("milestone") are

    milestone     = p / n                (where in the log it happened)
    sup_before    = i / p                (support over positions 1..p)
    sup_after     = (cov - i) / (n - p)  (support over positions p+1..n;
                                          defined as 0 when p = n)
    ratio         = (sup_after - sup_before) / max(sup_after, sup_before)

ratio lies in [-1, 1]; a large positive value means the pattern picks up
frequency after this point, a large negative value means it falls off. All
values are exact Fractions, so ratio ties are detected by true equality.
"""

from bisect import bisect_left
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import _backend
from .dataset import (
    Itemset,
    MilestoneRange,
    MiningConfig,
    TransactionDatabase,
    _batch_contains,
    _window_lower_bound,
    canonical_itemset,
    pattern_sort_key,
    window_positions,
)
from .frequent import FrequentPattern


@dataclass(frozen=True)
class MilestonePoint:
    """Statistics of one occurrence of a pattern."""

    occurrence_index: int
    position: int
    milestone: Fraction  # position / database size
    sup_before: Fraction
    sup_after: Fraction
    ratio: Fraction
    timestamp_label: str

    @property
    def milestone_pct(self) -> Fraction:
        return self.milestone * 100


class PatternKind(Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"


@dataclass(frozen=True)
class TransitionalPattern:
    """A pattern whose frequency shifts significantly, with the extreme milestones.

    For a POSITIVE pattern the stored milestones all achieve the maximal
    qualifying ratio (>= tt); for a NEGATIVE one the minimal (<= -tt). Ties
    are kept, in ascending position order.
    """

    itemset: Itemset
    kind: PatternKind
    milestones: tuple[MilestonePoint, ...]


@dataclass
class TransitionalResult:
    positives: list[TransitionalPattern] = field(default_factory=list)
    negatives: list[TransitionalPattern] = field(default_factory=list)


def occurrence_positions(db: TransactionDatabase, itemset: Iterable[str]) -> list[int]:
    """Positions of all transactions containing `itemset`, ascending."""
    items = canonical_itemset(itemset)
    if not items:
        raise ValueError("itemset must not be empty")
    row = _batch_contains(db, [items])[0]
    return [int(r) + 1 for r in np.nonzero(row)[0]]


def _point(db: TransactionDatabase, cov: int, index: int, position: int) -> MilestonePoint:
    size = db.size
    sup_before = Fraction(index, position)
    if position < size:
        sup_after = Fraction(cov - index, size - position)
    else:
        sup_after = Fraction(0)
    ratio = (sup_after - sup_before) / max(sup_after, sup_before)
    return MilestonePoint(
        occurrence_index=index,
        position=position,
        milestone=Fraction(position, size),
        sup_before=sup_before,
        sup_after=sup_after,
        ratio=ratio,
        timestamp_label=db.transactions[position - 1].timestamp.label,
    )


def milestone_stats(db: TransactionDatabase, itemset: Iterable[str], index: int) -> MilestonePoint:
    """Statistics of the `index`-th occurrence (1-based) of `itemset`."""
    occ = occurrence_positions(db, itemset)
    if not 1 <= index <= len(occ):
        raise IndexError(f"occurrence index {index} out of range 1..{len(occ)}")
    return _point(db, cov=len(occ), index=index, position=occ[index - 1])


def initial_counts(
    db: TransactionDatabase, patterns: Sequence[FrequentPattern], window: MilestoneRange
) -> list[int]:
    """Occurrences of each pattern strictly before the window's first position."""
    lo = _window_lower_bound(db.size, window)
    contains = _batch_contains(db, [p.itemset for p in patterns])
    return [int(c) for c in contains[:, : lo - 1].sum(axis=1)]


class _ExtremeTracker:
    """Keeps the milestones achieving the extreme ratio on each side, with ties."""

    def __init__(self):
        self.max_ratio = Fraction(0)
        self.min_ratio = Fraction(0)
        self.ascending: list[MilestonePoint] = []
        self.descending: list[MilestonePoint] = []

    def feed(self, point: MilestonePoint, upward: bool) -> None:
        if upward:
            if point.ratio > self.max_ratio:
                self.ascending = [point]
                self.max_ratio = point.ratio
            elif point.ratio == self.max_ratio:
                self.ascending.append(point)
        else:
            if point.ratio < self.min_ratio:
                self.descending = [point]
                self.min_ratio = point.ratio
            elif point.ratio == self.min_ratio:
                self.descending.append(point)

    def flush(self, itemset: Itemset, result: TransitionalResult) -> None:
        if self.ascending:
            result.positives.append(
                TransitionalPattern(itemset, PatternKind.POSITIVE, tuple(self.ascending))
            )
        if self.descending:
            result.negatives.append(
                TransitionalPattern(itemset, PatternKind.NEGATIVE, tuple(self.descending))
            )


def _scan_pattern_exact(
    db: TransactionDatabase, occ: list[int], lo: int, hi: int, config: MiningConfig
) -> _ExtremeTracker:
    """Pure-Fraction window scan of one pattern; fallback for huge thresholds
    whose denominators would overflow the int64 kernel predicates."""
    tracker = _ExtremeTracker()
    cov = len(occ)
    for idx in range(bisect_left(occ, lo), cov):
        position = occ[idx]
        if position > hi:
            break
        point = _point(db, cov, index=idx + 1, position=position)
        if point.sup_before < config.ts or point.sup_after < config.ts:
            continue
        if point.ratio >= config.tt:
            tracker.feed(point, upward=True)
        elif point.ratio <= -config.tt:
            tracker.feed(point, upward=False)
    return tracker


def mine_transitional(
    db: TransactionDatabase, patterns: Sequence[FrequentPattern], config: MiningConfig
) -> TransitionalResult:
    """Classify patterns by their in-window frequency shifts.

    Transactions inside the window are scanned in position order (occurrences
    before it only advance the occurrence index). A milestone is evaluated
    only when both sup_before and sup_after reach config.ts; it counts as a
    shift when |ratio| reaches config.tt. Patterns with a positive (negative)
    shift are returned with the milestones achieving their maximal (minimal)
    ratio. Both lists are sorted by (length, lexicographic); a pattern can
    appear in both.
    """
    result = TransitionalResult()
    bounds = window_positions(db, config.window)
    if bounds is None or not patterns:
        return result
    lo, hi = bounds
    contains = _batch_contains(db, [p.itemset for p in patterns])
    covers = contains.sum(axis=1, dtype=np.int64)

    max_den = max(config.ts.denominator, config.tt.denominator)
    if db.size * db.size * max_den >= 2**62:
        for pattern, row in zip(patterns, contains):
            occ = [int(r) + 1 for r in np.nonzero(row)[0]]
            _scan_pattern_exact(db, occ, lo, hi, config).flush(pattern.itemset, result)
    else:
        before = contains[:, : lo - 1].sum(axis=1, dtype=np.int64)
        pattern_idx, occ_idx, positions, sides = _backend.scan_window(
            contains[:, lo - 1 : hi], before, covers, db.size, lo,
            config.ts.numerator, config.ts.denominator,
            config.tt.numerator, config.tt.denominator,
        )
        current = -1
        tracker = _ExtremeTracker()
        for p, index, position, side in zip(pattern_idx, occ_idx, positions, sides):
            if p != current:
                if current >= 0:
                    tracker.flush(patterns[current].itemset, result)
                tracker = _ExtremeTracker()
                current = int(p)
            point = _point(db, int(covers[p]), int(index), int(position))
            tracker.feed(point, upward=side > 0)
        if current >= 0:
            tracker.flush(patterns[current].itemset, result)

    result.positives.sort(key=lambda p: pattern_sort_key(p.itemset))
    result.negatives.sort(key=lambda p: pattern_sort_key(p.itemset))
    return result
