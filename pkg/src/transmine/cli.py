"""Command-line front end: mine one report, or compare the two seeding modes."""

import argparse
import json
import sys
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dataset import (
    Algorithm,
    DataFormatError,
    MilestoneRange,
    MiningConfig,
    TransactionDatabase,
    load_database,
)
from .frequent import FrequentPattern, effective_min_count, mine_frequent
from .transitional import MilestonePoint, TransitionalResult, mine_transitional

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_USAGE = 2


# ---------------------------------------------------------------- formatting

def decimal_str(value: Fraction, places: int) -> str:
    """Exact decimal rendering of a Fraction with a fixed number of places."""
    rounded = round(value, places) if places else Fraction(round(value))
    sign = "-" if rounded < 0 else ""
    scaled = abs(rounded) * 10**places
    digits = str(scaled.numerator // scaled.denominator).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"


def minimal_decimal(value: Fraction, max_places: int) -> str:
    """Shortest exact decimal within max_places, else rounded to max_places."""
    for places in range(max_places):
        if round(value, places) == value:
            return decimal_str(value, places)
    return decimal_str(value, max_places)


def format_pct(pct: Fraction) -> str:
    """Milestone percentage, e.g. 31.25 -> "31.25", 37.5 -> "37.5", 25 -> "25"."""
    return minimal_decimal(pct, 2)


def format_ratio_pct(ratio: Fraction) -> str:
    """Shift ratio as a percentage with exactly three decimals, e.g. "72.500"."""
    return decimal_str(ratio * 100, 3)


def format_itemset(itemset: Sequence[str]) -> str:
    return ",".join(itemset)


def format_milestone(point: MilestonePoint) -> str:
    return f"{point.timestamp_label}({format_pct(point.milestone_pct)}%), {format_ratio_pct(point.ratio)} %"


def _fraction_json(value: Fraction) -> dict:
    return {
        "decimal": minimal_decimal(value, 6),
        "num": value.numerator,
        "den": value.denominator,
    }


# ------------------------------------------------------------------- reports

@dataclass
class Report:
    input_path: str
    config: MiningConfig
    db_size: int
    min_support_count: int
    elapsed_seconds: float
    frequent: list[FrequentPattern]
    result: TransitionalResult


@dataclass
class ComparisonRow:
    min_sup: int
    tp_count: int
    etp_count: int
    identical: bool


def _window_display(window: MilestoneRange) -> str:
    return f"{format_pct(window.low_pct)}%..{format_pct(window.high_pct)}%"


def render_report_text(report: Report) -> str:
    config = report.config
    lines = [
        "transmine mining report",
        f"input:     {report.input_path}",
        f"algorithm: {config.algorithm.value}",
        f"db size:   {report.db_size}",
        f"ts:        {minimal_decimal(config.ts, 6)}",
        f"tt:        {minimal_decimal(config.tt, 6)}",
        f"window:    {_window_display(config.window)}",
        f"min count: {report.min_support_count}",
        f"elapsed:   {report.elapsed_seconds:.3f}s",
        "",
        f"frequent patterns ({len(report.frequent)})",
    ]
    for pattern in report.frequent:
        lines.append(f"{format_itemset(pattern.itemset)}  {pattern.support_count}")
    lines.append("")
    lines.append(f"positive transitional patterns ({len(report.result.positives)})")
    for tp in report.result.positives:
        milestones = "; ".join(format_milestone(p) for p in tp.milestones)
        lines.append(f"{format_itemset(tp.itemset)}  {milestones}")
    lines.append("")
    lines.append(f"negative transitional patterns ({len(report.result.negatives)})")
    for tp in report.result.negatives:
        milestones = "; ".join(format_milestone(p) for p in tp.milestones)
        lines.append(f"{format_itemset(tp.itemset)}  {milestones}")
    return "\n".join(lines) + "\n"


def _milestone_json(point: MilestonePoint) -> dict:
    return {
        "label": point.timestamp_label,
        "occurrence": point.occurrence_index,
        "position": point.position,
        "milestone": _fraction_json(point.milestone),
        "sup_before": _fraction_json(point.sup_before),
        "sup_after": _fraction_json(point.sup_after),
        "ratio": _fraction_json(point.ratio),
        "display": format_milestone(point),
    }


def report_json_obj(report: Report) -> dict:
    config = report.config
    meta = {
        "input": report.input_path,
        "algorithm": config.algorithm.value,
        "db_size": report.db_size,
        "ts": _fraction_json(config.ts),
        "tt": _fraction_json(config.tt),
        "window": {
            "low_pct": _fraction_json(config.window.low_pct),
            "high_pct": _fraction_json(config.window.high_pct),
        },
        "min_support_count": report.min_support_count,
        "frequent_count": len(report.frequent),
        "positive_count": len(report.result.positives),
        "negative_count": len(report.result.negatives),
        "elapsed_seconds": report.elapsed_seconds,
    }
    return {
        "meta": meta,
        "frequent": [
            {"items": list(p.itemset), "support": p.support_count} for p in report.frequent
        ],
        "positive": [
            {"items": list(p.itemset), "milestones": [_milestone_json(m) for m in p.milestones]}
            for p in report.result.positives
        ],
        "negative": [
            {"items": list(p.itemset), "milestones": [_milestone_json(m) for m in p.milestones]}
            for p in report.result.negatives
        ],
    }


def render_json(obj: dict) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def render_compare_text(rows: list[ComparisonRow], input_path: str,
                        ts: Fraction, tt: Fraction, window: MilestoneRange) -> str:
    lines = [
        "transmine comparison report",
        f"input:  {input_path}",
        f"ts:     {minimal_decimal(ts, 6)}",
        f"tt:     {minimal_decimal(tt, 6)}",
        f"window: {_window_display(window)}",
        "",
        "min_sup  tp_frequent  etp_frequent  identical",
    ]
    for row in rows:
        lines.append(
            f"{row.min_sup:<8d} {row.tp_count:<12d} {row.etp_count:<13d} "
            f"{'yes' if row.identical else 'NO'}"
        )
    return "\n".join(lines) + "\n"


# ----------------------------------------------------------------- arguments

def _threshold_arg(text: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0 < value <= 1:
        raise argparse.ArgumentTypeError(f"must be in (0, 1], got {text}")
    return value


def _range_arg(text: str) -> MilestoneRange:
    parts = text.split(":")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}, expected LOW:HIGH")
    try:
        return MilestoneRange(Fraction(parts[0]), Fraction(parts[1]))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}: {exc}")


def _count_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transmine",
        description="Mine frequent itemsets and their significant frequency shifts "
        "from a timestamped transaction CSV.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--input", required=True, help="transaction CSV file (tid,items,timestamp)")
        p.add_argument("--ts", required=True, type=_threshold_arg,
                       help="pattern support threshold, fraction in (0,1]")
        p.add_argument("--tt", required=True, type=_threshold_arg,
                       help="transitional pattern threshold, fraction in (0,1]")
        p.add_argument("--range", required=True, type=_range_arg, dest="window",
                       metavar="LOW:HIGH", help="milestone window in percent, e.g. 25:75")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", default=None, help="output file (default: stdout)")

    mine = sub.add_parser("mine", help="run one algorithm and print the full report")
    common(mine)
    mine.add_argument("--algorithm", choices=("tp", "etp"), default="etp")
    mine.add_argument("--min-sup-count", type=_count_arg, default=None,
                      help="absolute minimum support count (overrides ts for the frequent phase)")

    compare = sub.add_parser("compare", help="run both algorithms and tabulate pattern counts")
    common(compare)
    compare.add_argument("--min-sup-count", type=_count_arg, action="append", required=True,
                         help="absolute minimum support count; repeat for several rows")
    return parser


def _emit(text: str, output: str | None) -> None:
    if output is None:
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(text)


class _InputError(Exception):
    pass


def _load(path: str) -> TransactionDatabase:
    try:
        return load_database(path)
    except OSError as exc:
        raise _InputError(f"cannot read {path!r}: {exc}") from None
    except DataFormatError as exc:
        raise _InputError(f"bad input file {path!r}: {exc}") from None


def _fail(message: str) -> int:
    print(f"transmine: error: {message}", file=sys.stderr)
    return EXIT_INPUT


def run_mine(args: argparse.Namespace) -> int:
    db = _load(args.input)
    config = MiningConfig(
        ts=args.ts,
        tt=args.tt,
        window=args.window,
        algorithm=Algorithm(args.algorithm),
        min_sup_count=args.min_sup_count,
    )
    started = time.perf_counter()
    patterns = mine_frequent(db, config)
    result = mine_transitional(db, patterns, config)
    elapsed = time.perf_counter() - started
    report = Report(
        input_path=args.input,
        config=config,
        db_size=db.size,
        min_support_count=effective_min_count(config, db.size),
        elapsed_seconds=elapsed,
        frequent=patterns,
        result=result,
    )
    if args.format == "json":
        _emit(render_json(report_json_obj(report)), args.output)
    else:
        _emit(render_report_text(report), args.output)
    return EXIT_OK


def run_compare(args: argparse.Namespace) -> int:
    db = _load(args.input)
    rows = []
    for count in args.min_sup_count:
        results = {}
        counts = {}
        for algorithm in (Algorithm.TP_MINE, Algorithm.ETP_MINE):
            config = MiningConfig(
                ts=args.ts,
                tt=args.tt,
                window=args.window,
                algorithm=algorithm,
                min_sup_count=count,
            )
            patterns = mine_frequent(db, config)
            counts[algorithm] = len(patterns)
            results[algorithm] = mine_transitional(db, patterns, config)
        rows.append(
            ComparisonRow(
                min_sup=count,
                tp_count=counts[Algorithm.TP_MINE],
                etp_count=counts[Algorithm.ETP_MINE],
                identical=results[Algorithm.TP_MINE] == results[Algorithm.ETP_MINE],
            )
        )
    if args.format == "json":
        obj = {
            "meta": {
                "input": args.input,
                "db_size": db.size,
                "ts": _fraction_json(args.ts),
                "tt": _fraction_json(args.tt),
                "window": {
                    "low_pct": _fraction_json(args.window.low_pct),
                    "high_pct": _fraction_json(args.window.high_pct),
                },
            },
            "rows": [
                {
                    "min_sup": r.min_sup,
                    "tp_count": r.tp_count,
                    "etp_count": r.etp_count,
                    "identical": r.identical,
                }
                for r in rows
            ],
        }
        _emit(render_json(obj), args.output)
    else:
        _emit(render_compare_text(rows, args.input, args.ts, args.tt, args.window),
              args.output)
    return EXIT_OK


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "mine":
            return run_mine(args)
        return run_compare(args)
    except _InputError as exc:
        return _fail(str(exc))


if __name__ == "__main__":
    sys.exit(main())
