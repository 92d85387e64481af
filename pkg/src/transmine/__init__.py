"""Transitional pattern mining over timestamped transaction databases.

Finds frequent itemsets whose frequency shifts significantly at some point
of the transaction log, together with the milestones where the shift is most
pronounced. Two seeding modes are provided: tp (classic, candidate items are
the whole universe) and etp (candidate items restricted to those occurring
inside the milestone window, which prunes patterns that could never produce
a milestone).
"""

from .dataset import (
    Algorithm,
    DataFormatError,
    ItemId,
    Itemset,
    MilestoneRange,
    MiningConfig,
    Timestamp,
    Transaction,
    TransactionDatabase,
    canonical_itemset,
    cover_count,
    items_in_window,
    load_database,
    support_ratio,
    window_positions,
)
from .frequent import (
    FrequentPattern,
    apriori_gen,
    effective_min_count,
    mine_frequent,
    seed_items,
)
from .transitional import (
    MilestonePoint,
    PatternKind,
    TransitionalPattern,
    TransitionalResult,
    initial_counts,
    milestone_stats,
    mine_transitional,
    occurrence_positions,
)

__version__ = "0.1.0"

__all__ = [
    "Algorithm",
    "DataFormatError",
    "FrequentPattern",
    "ItemId",
    "Itemset",
    "MilestonePoint",
    "MilestoneRange",
    "MiningConfig",
    "PatternKind",
    "Timestamp",
    "Transaction",
    "TransactionDatabase",
    "TransitionalPattern",
    "TransitionalResult",
    "apriori_gen",
    "canonical_itemset",
    "cover_count",
    "effective_min_count",
    "initial_counts",
    "items_in_window",
    "load_database",
    "milestone_stats",
    "mine_frequent",
    "mine_transitional",
    "occurrence_positions",
    "seed_items",
    "support_ratio",
    "window_positions",
    "__version__",
]
