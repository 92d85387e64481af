"""Benchmark the numba and numpy counting backends on synthetic data.

Builds one synthetic transaction database, runs both mining phases under
each available backend, verifies the outputs are identical, and prints the
timings. Run as:

    python benchmarks/bench_backends.py --transactions 4000 --items 24
"""

import argparse
import random
import time

from transmine import (
    MiningConfig,
    MilestoneRange,
    Algorithm,
    Timestamp,
    Transaction,
    TransactionDatabase,
    mine_frequent,
    mine_transitional,
)
from transmine import _backend


def synthetic_database(n_transactions: int, n_items: int, seed: int) -> TransactionDatabase:
    rng = random.Random(seed)
    labels = [f"I{i:02d}" for i in range(1, n_items + 1)]
    # skewed popularity so multi-item patterns survive realistic thresholds
    weights = [1.0 / (rank + 1) for rank in range(n_items)]
    transactions = []
    for pos in range(1, n_transactions + 1):
        size = rng.randint(2, max(3, n_items // 3))
        basket = set()
        while len(basket) < size:
            basket.add(rng.choices(labels, weights=weights, k=1)[0])
        month_index = (pos - 1) * 120 // n_transactions  # spread over ten years
        transactions.append(
            Transaction(
                tid=f"t{pos}",
                timestamp=Timestamp(2010 + month_index // 12, 1 + month_index % 12),
                position=pos,
                items=tuple(sorted(basket)),
            )
        )
    return TransactionDatabase(transactions)


def run_once(db: TransactionDatabase, config: MiningConfig):
    patterns = mine_frequent(db, config)
    result = mine_transitional(db, patterns, config)
    return patterns, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--transactions", type=int, default=4000)
    parser.add_argument("--items", type=int, default=24)
    parser.add_argument("--seed", type=int, default=7)
    parser.add_argument("--ts", default="0.05")
    parser.add_argument("--tt", default="0.3")
    parser.add_argument("--range", dest="window", default="20:80")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    low, high = args.window.split(":")
    config = MiningConfig(
        ts=args.ts,
        tt=args.tt,
        window=MilestoneRange(low, high),
        algorithm=Algorithm.ETP_MINE,
    )
    print(f"building synthetic database: {args.transactions} transactions, {args.items} items")
    db = synthetic_database(args.transactions, args.items, args.seed)

    original = _backend.active_backend()
    timings = {}
    outputs = {}
    try:
        for name in _backend.available_backends():
            _backend.use(name)
            run_once(db, config)  # warmup; pays jit compilation for numba
            best = float("inf")
            for _ in range(args.repeat):
                started = time.perf_counter()
                outputs[name] = run_once(db, config)
                best = min(best, time.perf_counter() - started)
            timings[name] = best
            patterns, result = outputs[name]
            print(
                f"{name:>6}: {best * 1000:8.1f} ms   "
                f"(frequent={len(patterns)}, positive={len(result.positives)}, "
                f"negative={len(result.negatives)})"
            )
    finally:
        _backend.use(original)

    first = next(iter(outputs.values()))
    if any(out != first for out in outputs.values()):
        raise SystemExit("backend outputs differ; this is a bug")
    print("outputs identical across backends")
    if len(timings) == 2:
        print(f"speedup numba vs numpy: {timings['numpy'] / timings['numba']:.2f}x")


if __name__ == "__main__":
    main()
