"""Timestamped transaction databases and their basic support queries.

A database is an ordered log of transactions. Ordering is by timestamp with
input order breaking ties, and each transaction gets a 1-based position. All
support arithmetic is exact: counts are integers and ratios are `Fraction`s,
so downstream equality tests on ratios are reliable.
"""

import calendar
import datetime
import math
import re
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from pathlib import Path
from typing import IO, Iterable, Iterator, Sequence, Union

import numpy as np

from . import _backend

ItemId = str
Itemset = tuple[str, ...]


class DataFormatError(ValueError):
    """Raised when an input stream violates the transaction-CSV format."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


def as_fraction(value: Union[int, float, str, Fraction]) -> Fraction:
    """Exact rational from an int, str, Fraction, or float.

    Floats are interpreted through their decimal repr, so 0.05 means 1/20
    rather than the nearest binary float.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(str(value))
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a fraction")


def canonical_itemset(items: Iterable[str]) -> Itemset:
    """Deduplicate and sort item labels into the canonical ascending tuple."""
    return tuple(sorted(set(items)))


def pattern_sort_key(itemset: Itemset) -> tuple[int, Itemset]:
    """Report order for pattern lists: by length, then lexicographic."""
    return (len(itemset), itemset)


_TIMESTAMP_RE = re.compile(r"^(\d{4})-(\d{1,2})(?:-(\d{1,2}))?$")


@dataclass(frozen=True)
class Timestamp:
    """Calendar time at year-month or year-month-day granularity."""

    year: int
    month: int
    day: int | None = None

    def __post_init__(self):
        if not 1 <= self.month <= 12:
            raise ValueError(f"month out of range: {self.month}")
        if self.day is not None:
            try:
                datetime.date(self.year, self.month, self.day)
            except ValueError:
                raise ValueError(
                    f"invalid calendar date: {self.year}-{self.month:02d}-{self.day:02d}"
                ) from None

    @classmethod
    def parse(cls, text: str) -> "Timestamp":
        m = _TIMESTAMP_RE.match(text.strip())
        if m is None:
            raise ValueError(f"unparseable timestamp {text!r} (expected YYYY-MM or YYYY-MM-DD)")
        year, month, day = m.groups()
        return cls(int(year), int(month), int(day) if day is not None else None)

    def sort_key(self) -> tuple[int, int, int]:
        # a bare month sorts before any day within that month
        return (self.year, self.month, self.day or 0)

    @property
    def label(self) -> str:
        """Display form used in milestone listings, e.g. "aug2006"."""
        return f"{calendar.month_abbr[self.month].lower()}{self.year}"


@dataclass(frozen=True)
class Transaction:
    tid: str
    timestamp: Timestamp
    position: int
    items: Itemset


class TransactionDatabase:
    """Immutable position-indexed transaction log.

    Transactions are stored sorted by position (1..size). A boolean
    item-presence matrix is materialized once at construction; it backs the
    counting kernels and is safe to share across threads. The matrix carries
    one trailing always-false column so unknown item labels map to it and
    naturally count zero.
    """

    __slots__ = ("transactions", "item_universe", "_columns", "_presence")

    def __init__(self, transactions: Sequence[Transaction]):
        rows = tuple(transactions)
        if not rows:
            raise ValueError("a transaction database must contain at least one transaction")
        prev_key = None
        for idx, t in enumerate(rows):
            if t.position != idx + 1:
                raise ValueError(f"positions must be exactly 1..{len(rows)} in order")
            if not t.items:
                raise ValueError(f"transaction {t.tid!r} has no items")
            key = t.timestamp.sort_key()
            if prev_key is not None and key < prev_key:
                raise ValueError("transactions must be ordered by timestamp")
            prev_key = key
        self.transactions = rows
        universe: set[str] = set()
        for t in rows:
            universe.update(t.items)
        self.item_universe = frozenset(universe)
        ordered = sorted(universe)
        self._columns = {label: j for j, label in enumerate(ordered)}
        presence = np.zeros((len(rows), len(ordered) + 1), dtype=np.bool_)
        for r, t in enumerate(rows):
            for label in t.items:
                presence[r, self._columns[label]] = True
        self._presence = presence

    @property
    def size(self) -> int:
        return len(self.transactions)

    def __repr__(self) -> str:
        return f"TransactionDatabase(size={self.size}, items={len(self.item_universe)})"

    def _encode(self, itemsets: Sequence[Itemset]) -> tuple[np.ndarray, np.ndarray]:
        """Flatten itemsets into (column indices, offsets) for the kernels."""
        missing = len(self._columns)  # sentinel all-false column
        offsets = np.zeros(len(itemsets) + 1, dtype=np.int64)
        flat: list[int] = []
        for i, itemset in enumerate(itemsets):
            flat.extend(self._columns.get(label, missing) for label in itemset)
            offsets[i + 1] = len(flat)
        return np.asarray(flat, dtype=np.int64), offsets


def _batch_cover_counts(db: TransactionDatabase, itemsets: Sequence[Itemset]) -> np.ndarray:
    """Cover count of each itemset over the whole database, as int64."""
    if not itemsets:
        return np.zeros(0, dtype=np.int64)
    flat, offsets = db._encode(itemsets)
    return _backend.count_contains(db._presence, flat, offsets)


def _batch_contains(db: TransactionDatabase, itemsets: Sequence[Itemset]) -> np.ndarray:
    """Boolean matrix: row per itemset, column per transaction (position order)."""
    if not itemsets:
        return np.zeros((0, db.size), dtype=np.bool_)
    flat, offsets = db._encode(itemsets)
    return _backend.contains_matrix(db._presence, flat, offsets)


_HEADER = ("tid", "items", "timestamp")


def load_database(source: Union[str, Path, IO[str]]) -> TransactionDatabase:
    """Read a transaction-CSV stream or file into a database.

    Format: one transaction per line, `tid,items,timestamp`, where `items` is
    a semicolon-separated list of item labels. An optional header line is
    skipped, surrounding whitespace is trimmed, blank lines are ignored, and
    duplicate items within one row collapse to one. Transactions are ordered
    by timestamp; equal timestamps keep their input order.
    """
    if isinstance(source, (str, Path)):
        with open(source, "r", encoding="utf-8") as handle:
            return _parse_lines(handle)
    return _parse_lines(source)


def _parse_lines(lines: Iterator[str]) -> TransactionDatabase:
    parsed: list[tuple[tuple[int, int, int], int, str, Timestamp, Itemset]] = []
    seen_tids: set[str] = set()
    first_content = True
    for line_no, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line:
            continue
        parts = [p.strip() for p in line.split(",")]
        if first_content:
            first_content = False
            if tuple(p.lower() for p in parts) == _HEADER:
                continue
        if len(parts) != 3:
            raise DataFormatError(f"expected 3 comma-separated fields, got {len(parts)}", line_no)
        tid, items_field, ts_field = parts
        if not tid:
            raise DataFormatError("empty transaction id", line_no)
        if tid in seen_tids:
            raise DataFormatError(f"duplicate transaction id {tid!r}", line_no)
        seen_tids.add(tid)
        if not items_field:
            raise DataFormatError("empty item list", line_no)
        labels = [token.strip() for token in items_field.split(";")]
        if any(not token for token in labels):
            raise DataFormatError("empty item label", line_no)
        try:
            timestamp = Timestamp.parse(ts_field)
        except ValueError as exc:
            raise DataFormatError(str(exc), line_no) from None
        parsed.append((timestamp.sort_key(), len(parsed), tid, timestamp, canonical_itemset(labels)))
    if not parsed:
        raise DataFormatError("input contains no transactions")
    parsed.sort(key=lambda row: (row[0], row[1]))
    transactions = [
        Transaction(tid=tid, timestamp=ts, position=pos, items=items)
        for pos, (_, _, tid, ts, items) in enumerate(parsed, start=1)
    ]
    return TransactionDatabase(transactions)


@dataclass(frozen=True)
class MilestoneRange:
    """Percentage window [low_pct, high_pct] of interest, inclusive ends."""

    low_pct: Fraction
    high_pct: Fraction

    def __post_init__(self):
        object.__setattr__(self, "low_pct", as_fraction(self.low_pct))
        object.__setattr__(self, "high_pct", as_fraction(self.high_pct))
        if not (0 <= self.low_pct < self.high_pct <= 100):
            raise ValueError(
                f"invalid range: need 0 <= low < high <= 100, got {self.low_pct}:{self.high_pct}"
            )


class Algorithm(Enum):
    TP_MINE = "tp"
    ETP_MINE = "etp"


@dataclass(frozen=True)
class MiningConfig:
    """Thresholds and window for one mining run.

    `ts` is the pattern support threshold and `tt` the transitional pattern
    threshold, both fractions in (0, 1]. When `min_sup_count` is None the
    frequent-phase minimum count is derived from `ts`; otherwise the given
    absolute count is used (`ts` still gates milestone evaluation).
    """

    ts: Fraction
    tt: Fraction
    window: MilestoneRange
    algorithm: Algorithm = Algorithm.ETP_MINE
    min_sup_count: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "ts", as_fraction(self.ts))
        object.__setattr__(self, "tt", as_fraction(self.tt))
        if not 0 < self.ts <= 1:
            raise ValueError(f"ts must be in (0, 1], got {self.ts}")
        if not 0 < self.tt <= 1:
            raise ValueError(f"tt must be in (0, 1], got {self.tt}")
        if self.min_sup_count is not None and self.min_sup_count < 1:
            raise ValueError(f"min_sup_count must be >= 1, got {self.min_sup_count}")


def cover_count(db: TransactionDatabase, itemset: Iterable[str]) -> int:
    """Number of transactions containing every item of `itemset`."""
    items = canonical_itemset(itemset)
    if not items:
        raise ValueError("itemset must not be empty")
    cols = [db._columns.get(label, len(db._columns)) for label in items]
    return int(db._presence[:, cols].all(axis=1).sum())


def support_ratio(db: TransactionDatabase, itemset: Iterable[str]) -> Fraction:
    """cover_count / database size, exact."""
    return Fraction(cover_count(db, itemset), db.size)


def _window_lower_bound(size: int, window: MilestoneRange) -> int:
    """Smallest position whose percentage of `size` reaches the low bound."""
    return max(1, math.ceil(window.low_pct * size / 100))


def window_positions(db: TransactionDatabase, window: MilestoneRange) -> tuple[int, int] | None:
    """Inclusive position bounds (lo, hi) falling inside the percentage window.

    Returns None when no position qualifies, e.g. a narrow window between two
    attainable percentages.
    """
    lo = _window_lower_bound(db.size, window)
    hi = math.floor(window.high_pct * db.size / 100)
    if lo > hi:
        return None
    return lo, hi


def items_in_window(db: TransactionDatabase, window: MilestoneRange) -> frozenset[str]:
    """Union of the itemsets of all transactions positioned inside the window."""
    bounds = window_positions(db, window)
    if bounds is None:
        return frozenset()
    lo, hi = bounds
    out: set[str] = set()
    for t in db.transactions[lo - 1 : hi]:
        out.update(t.items)
    return frozenset(out)
