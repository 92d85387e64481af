"""Shared fixtures: the 16-transaction demo database and its golden results.

The demo database is small enough that every expected value below was
computed independently by exhaustive enumeration (and double-checked by
hand for several entries) before being frozen here.
"""

import io
import random
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import settings

from transmine import MiningConfig, MilestoneRange, Algorithm, load_database

settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")

REPO_ROOT = Path(__file__).resolve().parent.parent
DEMO_CSV_PATH = REPO_ROOT / "data" / "demo.csv"

DEMO_CSV = DEMO_CSV_PATH.read_text(encoding="utf-8")


@pytest.fixture(scope="session")
def demo_db():
    return load_database(io.StringIO(DEMO_CSV))


@pytest.fixture(scope="session")
def demo_window():
    return MilestoneRange(25, 75)


@pytest.fixture(scope="session")
def demo_config_tp(demo_window):
    return MiningConfig(ts=Fraction(1, 20), tt=Fraction(1, 2), window=demo_window,
                        algorithm=Algorithm.TP_MINE)


@pytest.fixture(scope="session")
def demo_config_etp(demo_window):
    return MiningConfig(ts=Fraction(1, 20), tt=Fraction(1, 2), window=demo_window,
                        algorithm=Algorithm.ETP_MINE)


# Golden support table for the demo database at minimum count 1 (87 itemsets).
GOLDEN_SUPPORTS = {
    "P1": 15, "P2": 10, "P3": 10, "P4": 9, "P5": 8, "P6": 7, "P7": 1, "P8": 1,
    "P1,P2": 10, "P1,P3": 10, "P1,P4": 8, "P1,P5": 7, "P1,P6": 6, "P1,P7": 1,
    "P1,P8": 1, "P2,P3": 6, "P2,P4": 4, "P2,P5": 5, "P2,P6": 4, "P2,P7": 1,
    "P2,P8": 1, "P3,P4": 5, "P3,P5": 5, "P3,P6": 4, "P3,P7": 1, "P3,P8": 1,
    "P4,P5": 4, "P4,P6": 6, "P5,P6": 3, "P6,P7": 1,
    "P1,P2,P3": 6, "P1,P2,P4": 4, "P1,P2,P5": 5, "P1,P2,P6": 4, "P1,P2,P7": 1,
    "P1,P2,P8": 1, "P1,P3,P4": 5, "P1,P3,P5": 5, "P1,P3,P6": 4, "P1,P3,P7": 1,
    "P1,P3,P8": 1, "P1,P4,P5": 3, "P1,P4,P6": 5, "P1,P5,P6": 2, "P1,P6,P7": 1,
    "P2,P3,P4": 2, "P2,P3,P5": 3, "P2,P3,P6": 3, "P2,P3,P7": 1, "P2,P3,P8": 1,
    "P2,P4,P5": 2, "P2,P4,P6": 3, "P2,P5,P6": 2, "P2,P6,P7": 1, "P3,P4,P5": 2,
    "P3,P4,P6": 3, "P3,P5,P6": 1, "P3,P6,P7": 1, "P4,P5,P6": 3,
    "P1,P2,P3,P4": 2, "P1,P2,P3,P5": 3, "P1,P2,P3,P6": 3, "P1,P2,P3,P7": 1,
    "P1,P2,P3,P8": 1, "P1,P2,P4,P5": 2, "P1,P2,P4,P6": 3, "P1,P2,P5,P6": 2,
    "P1,P2,P6,P7": 1, "P1,P3,P4,P5": 2, "P1,P3,P4,P6": 3, "P1,P3,P5,P6": 1,
    "P1,P3,P6,P7": 1, "P1,P4,P5,P6": 2, "P2,P3,P4,P5": 1, "P2,P3,P4,P6": 2,
    "P2,P3,P5,P6": 1, "P2,P3,P6,P7": 1, "P2,P4,P5,P6": 2, "P3,P4,P5,P6": 1,
    "P1,P2,P3,P4,P5": 1, "P1,P2,P3,P4,P6": 2, "P1,P2,P3,P5,P6": 1,
    "P1,P2,P3,P6,P7": 1, "P1,P2,P4,P5,P6": 2, "P1,P3,P4,P5,P6": 1,
    "P2,P3,P4,P5,P6": 1, "P1,P2,P3,P4,P5,P6": 1,
}

# Pruned-seeding golden table: same values minus every itemset touching P7/P8.
GOLDEN_SUPPORTS_WINDOWED = {
    pattern: support
    for pattern, support in GOLDEN_SUPPORTS.items()
    if "P7" not in pattern and "P8" not in pattern
}

# Golden transitional patterns for ts=0.05, tt=0.5, window 25..75:
# pattern -> list of (month label, milestone percentage, ratio percentage).
GOLDEN_POSITIVE = {
    "P3": [("aug2006", "62.5", "60.000")],
    "P4": [("mar2006", "31.25", "72.500")],
    "P6": [("apr2006", "37.5", "72.222")],
    "P1,P3": [("aug2006", "62.5", "60.000")],
    "P1,P4": [("mar2006", "31.25", "68.571")],
    "P1,P6": [("apr2006", "37.5", "66.667")],
    "P3,P4": [("may2006", "43.75", "67.857")],
    "P3,P5": [("aug2006", "62.5", "60.000")],
    "P3,P6": [("may2006", "43.75", "57.143")],
    "P4,P6": [("apr2006", "37.5", "66.667")],
    "P1,P3,P4": [("may2006", "43.75", "67.857")],
    "P1,P3,P5": [("aug2006", "62.5", "60.000")],
    "P1,P3,P6": [("may2006", "43.75", "57.143")],
    "P1,P4,P6": [("apr2006", "37.5", "58.333")],
}
GOLDEN_NEGATIVE = {
    "P2": [("may2006", "43.75", "-66.667")],
    "P6": [("sep2006", "68.75", "-63.333")],
    "P1,P2": [("may2006", "43.75", "-66.667")],
    "P1,P6": [("sep2006", "68.75", "-56.000")],
    "P2,P4": [("may2006", "43.75", "-74.074")],
    "P2,P5": [("apr2006", "37.5", "-60.000")],
    "P4,P6": [("aug2006", "62.5", "-66.667")],
    "P1,P2,P4": [("may2006", "43.75", "-74.074")],
    "P1,P2,P5": [("apr2006", "37.5", "-60.000")],
    "P1,P4,P6": [("aug2006", "62.5", "-58.333")],
    "P2,P4,P6": [("may2006", "43.75", "-61.111")],
    "P1,P2,P4,P6": [("may2006", "43.75", "-61.111")],
}


def random_database_csv(rng: random.Random, max_transactions: int = 12, max_items: int = 8) -> str:
    """Small random transaction CSV; occasional equal timestamps exercise ties."""
    n_items = rng.randint(2, max_items)
    labels = [f"P{i}" for i in range(1, n_items + 1)]
    n_rows = rng.randint(1, max_transactions)
    lines = ["tid,items,timestamp"]
    month_index = 0
    for row in range(n_rows):
        basket = rng.sample(labels, rng.randint(1, n_items))
        if rng.random() > 0.2:  # sometimes repeat a month
            month_index += 1
        year, month = 2020 + month_index // 12, 1 + month_index % 12
        lines.append(f"t{row + 1},{';'.join(basket)},{year}-{month:02d}")
    return "\n".join(lines) + "\n"


def random_database(rng: random.Random, max_transactions: int = 12, max_items: int = 8):
    return load_database(io.StringIO(random_database_csv(rng, max_transactions, max_items)))


def random_thresholds(rng: random.Random):
    """Random (ts, tt, window) triple for property sweeps."""
    ts = Fraction(rng.randint(1, 20), 20)
    tt = Fraction(rng.randint(1, 10), 10)
    low = rng.randint(0, 99)
    high = rng.randint(low + 1, 100)
    return ts, tt, MilestoneRange(low, high)
