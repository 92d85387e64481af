"""Level-wise frequent itemset mining with pluggable candidate seeding.

The classic join-and-prune candidate scheme, with one twist: the candidate
1-itemsets can be restricted to items that occur inside the configured
milestone window (the etp mode). Support counts are always taken over the
whole database, never just the window.
"""

import math
from dataclasses import dataclass
from typing import Sequence

from .dataset import (
    Algorithm,
    Itemset,
    MiningConfig,
    TransactionDatabase,
    _batch_cover_counts,
    items_in_window,
    pattern_sort_key,
)


@dataclass(frozen=True)
class FrequentPattern:
    itemset: Itemset
    support_count: int


def effective_min_count(config: MiningConfig, db_size: int) -> int:
    """Minimum support count: ceil(ts * size) in ratio mode, else the configured count."""
    if config.min_sup_count is not None:
        return config.min_sup_count
    return max(1, math.ceil(config.ts * db_size))


def seed_items(db: TransactionDatabase, config: MiningConfig) -> frozenset[str]:
    """Candidate single items: the whole universe, or only items seen in the window."""
    if config.algorithm is Algorithm.ETP_MINE:
        return items_in_window(db, config.window)
    return db.item_universe


def apriori_gen(level: Sequence[Itemset]) -> list[Itemset]:
    """Candidate (k+1)-itemsets from equal-length canonical k-itemsets.

    Pairs sharing a (k-1)-prefix are joined; a candidate survives only if all
    of its k-subsets are present in the input. Output is in canonical order.
    """
    if not level:
        return []
    k = len(level[0])
    have = set(level)
    ordered = sorted(have)
    candidates: list[Itemset] = []
    for idx, a in enumerate(ordered):
        for b in ordered[idx + 1 :]:
            if a[: k - 1] != b[: k - 1]:
                break  # sorted input keeps shared-prefix runs contiguous
            cand = a + (b[k - 1],)
            if all(cand[:j] + cand[j + 1 :] in have for j in range(k + 1)):
                candidates.append(cand)
    return candidates


def mine_frequent(db: TransactionDatabase, config: MiningConfig) -> list[FrequentPattern]:
    """All itemsets over the seed items meeting the minimum support count.

    Every returned pattern carries its support count over the full database.
    Output is sorted by (itemset length, lexicographic itemset).
    """
    min_count = effective_min_count(config, db.size)
    found: list[FrequentPattern] = []
    level: list[Itemset] = [(label,) for label in sorted(seed_items(db, config))]
    while level:
        counts = _batch_cover_counts(db, level)
        kept: list[Itemset] = []
        for itemset, count in zip(level, counts):
            if count >= min_count:
                kept.append(itemset)
                found.append(FrequentPattern(itemset, int(count)))
        level = apriori_gen(kept)
    found.sort(key=lambda p: pattern_sort_key(p.itemset))
    return found
