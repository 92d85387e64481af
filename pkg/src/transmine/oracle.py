"""Naive reference miners used by the test suite.

Everything here is recomputed from first principles with plain set operations
and Fractions: no candidate generation, no incremental counters, no shared
code with the production counting paths. Deliberately slow; guarded to small
item universes.
"""

import math
from fractions import Fraction
from itertools import combinations

from .dataset import Algorithm, MiningConfig, TransactionDatabase, pattern_sort_key
from .frequent import FrequentPattern
from .transitional import (
    MilestonePoint,
    PatternKind,
    TransitionalPattern,
    TransitionalResult,
)

MAX_UNIVERSE = 20


def _guard(db: TransactionDatabase) -> list[str]:
    universe = sorted(db.item_universe)
    if len(universe) > MAX_UNIVERSE:
        raise ValueError(f"item universe too large for exhaustive enumeration (> {MAX_UNIVERSE})")
    return universe


def enumerate_all_frequent(db: TransactionDatabase, min_count: int) -> list[FrequentPattern]:
    """Every non-empty itemset with cover >= min_count, by per-subset counting."""
    universe = _guard(db)
    rows = [set(t.items) for t in db.transactions]
    found = []
    for k in range(1, len(universe) + 1):
        for combo in combinations(universe, k):
            needed = set(combo)
            count = sum(1 for row in rows if needed <= row)
            if count >= min_count:
                found.append(FrequentPattern(combo, count))
    found.sort(key=lambda p: pattern_sort_key(p.itemset))
    return found


def brute_force_transitional(db: TransactionDatabase, config: MiningConfig) -> TransitionalResult:
    """Evaluate every occurrence of every eligible itemset straight from the definitions."""
    universe = _guard(db)
    rows = [set(t.items) for t in db.transactions]
    size = db.size
    low, high = config.window.low_pct, config.window.high_pct

    in_window = [low <= Fraction(100 * pos, size) <= high for pos in range(1, size + 1)]
    if config.algorithm is Algorithm.ETP_MINE:
        seeds: set[str] = set()
        for pos, row in enumerate(rows, start=1):
            if in_window[pos - 1]:
                seeds.update(row)
    else:
        seeds = set(universe)

    if config.min_sup_count is not None:
        min_count = config.min_sup_count
    else:
        min_count = max(1, math.ceil(config.ts * size))

    result = TransitionalResult()
    for k in range(1, len(seeds) + 1):
        for combo in combinations(sorted(seeds), k):
            needed = set(combo)
            occurrences = [pos for pos, row in enumerate(rows, start=1) if needed <= row]
            cov = len(occurrences)
            if cov < min_count:
                continue
            points = []
            for index, pos in enumerate(occurrences, start=1):
                if not in_window[pos - 1]:
                    continue
                sup_before = Fraction(index, pos)
                sup_after = Fraction(cov - index, size - pos) if pos < size else Fraction(0)
                if sup_before < config.ts or sup_after < config.ts:
                    continue
                ratio = (sup_after - sup_before) / max(sup_after, sup_before)
                if abs(ratio) < config.tt:
                    continue
                points.append(
                    MilestonePoint(
                        occurrence_index=index,
                        position=pos,
                        milestone=Fraction(pos, size),
                        sup_before=sup_before,
                        sup_after=sup_after,
                        ratio=ratio,
                        timestamp_label=db.transactions[pos - 1].timestamp.label,
                    )
                )
            ups = [p for p in points if p.ratio >= config.tt]
            downs = [p for p in points if p.ratio <= -config.tt]
            if ups:
                best = max(p.ratio for p in ups)
                result.positives.append(
                    TransitionalPattern(
                        combo, PatternKind.POSITIVE, tuple(p for p in ups if p.ratio == best)
                    )
                )
            if downs:
                worst = min(p.ratio for p in downs)
                result.negatives.append(
                    TransitionalPattern(
                        combo, PatternKind.NEGATIVE, tuple(p for p in downs if p.ratio == worst)
                    )
                )
    result.positives.sort(key=lambda p: pattern_sort_key(p.itemset))
    result.negatives.sort(key=lambda p: pattern_sort_key(p.itemset))
    return result
