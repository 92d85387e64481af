"""CLI behaviour: flags, exit codes, text and JSON reports, comparison table."""

import json
import random
from fractions import Fraction

import pytest

from transmine.cli import (
    decimal_str,
    format_pct,
    format_ratio_pct,
    main,
    minimal_decimal,
)

from conftest import (
    DEMO_CSV,
    GOLDEN_NEGATIVE,
    GOLDEN_POSITIVE,
    GOLDEN_SUPPORTS,
    GOLDEN_SUPPORTS_WINDOWED,
    random_database_csv,
)


@pytest.fixture()
def demo_csv_file(tmp_path):
    path = tmp_path / "demo.csv"
    path.write_text(DEMO_CSV, encoding="utf-8")
    return str(path)


def mine_args(demo_csv_file, *extra):
    return ["mine", "--input", demo_csv_file, "--ts", "0.05", "--tt", "0.5",
            "--range", "25:75", *extra]


class TestFormatting:
    def test_decimal_str_is_exact(self):
        assert decimal_str(Fraction(29, 40) * 100, 3) == "72.500"
        assert decimal_str(Fraction(-2, 3) * 100, 3) == "-66.667"
        assert decimal_str(Fraction(13, 18) * 100, 3) == "72.222"
        assert decimal_str(Fraction(-19, 30) * 100, 3) == "-63.333"

    def test_format_pct_minimal_decimals(self):
        assert format_pct(Fraction(25)) == "25"
        assert format_pct(Fraction(125, 4)) == "31.25"
        assert format_pct(Fraction(75, 2)) == "37.5"
        assert format_pct(Fraction(100, 3)) == "33.33"

    def test_format_ratio(self):
        assert format_ratio_pct(Fraction(29, 40)) == "72.500"
        assert format_ratio_pct(Fraction(-11, 18)) == "-61.111"

    def test_minimal_decimal(self):
        assert minimal_decimal(Fraction(1, 20), 6) == "0.05"
        assert minimal_decimal(Fraction(1, 2), 6) == "0.5"
        assert minimal_decimal(Fraction(1, 3), 6) == "0.333333"


class TestMineCommand:
    def test_etp_text_report(self, demo_csv_file, capsys):
        assert main(mine_args(demo_csv_file, "--algorithm", "etp")) == 0
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert "frequent patterns (63)" in out
        assert "positive transitional patterns (14)" in out
        assert "negative transitional patterns (12)" in out
        for pattern, support in GOLDEN_SUPPORTS_WINDOWED.items():
            assert f"{pattern}  {support}" in lines
        for table in (GOLDEN_POSITIVE, GOLDEN_NEGATIVE):
            for pattern, milestones in table.items():
                label, pct, ratio = milestones[0]
                assert f"{pattern}  {label}({pct}%), {ratio} %" in lines

    def test_tp_text_report(self, demo_csv_file, capsys):
        assert main(mine_args(demo_csv_file, "--algorithm", "tp")) == 0
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert "frequent patterns (87)" in out
        assert "positive transitional patterns (14)" in out
        assert "negative transitional patterns (12)" in out
        for pattern, support in GOLDEN_SUPPORTS.items():
            assert f"{pattern}  {support}" in lines
        # transitional sections identical to the pruned-seeding run
        for table in (GOLDEN_POSITIVE, GOLDEN_NEGATIVE):
            for pattern, milestones in table.items():
                label, pct, ratio = milestones[0]
                assert f"{pattern}  {label}({pct}%), {ratio} %" in lines

    def test_json_report_schema_and_roundtrip(self, demo_csv_file, capsys):
        assert main(mine_args(demo_csv_file, "--format", "json")) == 0
        out = capsys.readouterr().out
        obj = json.loads(out)
        assert set(obj) == {"meta", "frequent", "positive", "negative"}
        assert obj["meta"]["frequent_count"] == 63
        assert obj["meta"]["positive_count"] == 14
        assert obj["meta"]["negative_count"] == 12
        assert obj["meta"]["min_support_count"] == 1
        assert obj["meta"]["db_size"] == 16
        # fractions carry both a decimal and an exact num/den pair
        assert obj["meta"]["ts"] == {"decimal": "0.05", "num": 1, "den": 20}
        assert obj["meta"]["window"]["low_pct"]["num"] == 25
        first = obj["positive"][0]["milestones"][0]
        for key in ("milestone", "sup_before", "sup_after", "ratio"):
            assert set(first[key]) == {"decimal", "num", "den"}
        p4 = next(p for p in obj["positive"] if p["items"] == ["P4"])
        ratio = p4["milestones"][0]["ratio"]
        assert (ratio["num"], ratio["den"]) == (29, 40)
        # byte-exact round trip through parse and re-render
        assert json.dumps(obj, indent=2, sort_keys=True) + "\n" == out

    def test_output_file(self, demo_csv_file, tmp_path, capsys):
        target = tmp_path / "report.txt"
        assert main(mine_args(demo_csv_file, "--output", str(target))) == 0
        assert capsys.readouterr().out == ""
        assert "frequent patterns (63)" in target.read_text(encoding="utf-8")

    def test_min_sup_count_switches_to_absolute(self, demo_csv_file, capsys):
        assert main(mine_args(demo_csv_file, "--min-sup-count", "3")) == 0
        out = capsys.readouterr().out
        lines = out.splitlines()
        assert "min count: 3" in out
        assert "P5,P6  3" in lines  # support exactly at the cut stays
        assert not any(line.startswith("P2,P3,P4 ") for line in lines)  # support 2 drops

    def test_invalid_range_exits_2(self, demo_csv_file, capsys):
        with pytest.raises(SystemExit) as err:
            main(mine_args_with_range(demo_csv_file, "75:25"))
        assert err.value.code == 2
        assert "invalid range" in capsys.readouterr().err

    def test_bad_threshold_exits_2(self, demo_csv_file, capsys):
        with pytest.raises(SystemExit) as err:
            main(["mine", "--input", demo_csv_file, "--ts", "1.5", "--tt", "0.5",
                  "--range", "25:75"])
        assert err.value.code == 2

    def test_missing_input_exits_1(self, capsys):
        code = main(["mine", "--input", "/nonexistent/file.csv", "--ts", "0.05",
                     "--tt", "0.5", "--range", "25:75"])
        assert code == 1
        assert "cannot read" in capsys.readouterr().err

    def test_malformed_input_exits_1(self, tmp_path, capsys):
        path = tmp_path / "bad.csv"
        path.write_text("t1,P1\n", encoding="utf-8")
        code = main(["mine", "--input", str(path), "--ts", "0.05", "--tt", "0.5",
                     "--range", "25:75"])
        assert code == 1
        assert "line 1" in capsys.readouterr().err


def mine_args_with_range(demo_csv_file, range_text):
    return ["mine", "--input", demo_csv_file, "--ts", "0.05", "--tt", "0.5",
            "--range", range_text]


class TestCompareCommand:
    def test_demo_row(self, demo_csv_file, capsys):
        code = main(["compare", "--input", demo_csv_file, "--ts", "0.05", "--tt", "0.5",
                     "--range", "25:75", "--min-sup-count", "1"])
        assert code == 0
        out = capsys.readouterr().out
        row = next(line for line in out.splitlines() if line.startswith("1"))
        assert row.split() == ["1", "87", "63", "yes"]

    def test_multiple_counts_json(self, demo_csv_file, capsys):
        code = main(["compare", "--input", demo_csv_file, "--ts", "0.05", "--tt", "0.5",
                     "--range", "25:75", "--min-sup-count", "1", "--min-sup-count", "2",
                     "--min-sup-count", "16", "--format", "json"])
        assert code == 0
        obj = json.loads(capsys.readouterr().out)
        rows = {r["min_sup"]: r for r in obj["rows"]}
        assert rows[1]["tp_count"] == 87 and rows[1]["etp_count"] == 63
        assert rows[16]["tp_count"] == 0 and rows[16]["etp_count"] == 0
        assert all(r["identical"] for r in obj["rows"])
        assert all(r["etp_count"] <= r["tp_count"] for r in obj["rows"])

    def test_requires_min_sup_count(self, demo_csv_file):
        with pytest.raises(SystemExit) as err:
            main(["compare", "--input", demo_csv_file, "--ts", "0.05", "--tt", "0.5",
                  "--range", "25:75"])
        assert err.value.code == 2

    def test_random_sweep_never_increases_counts(self, tmp_path, capsys):
        rng = random.Random(2024)
        for case in range(5):
            path = tmp_path / f"random{case}.csv"
            path.write_text(random_database_csv(rng), encoding="utf-8")
            low = rng.randint(0, 50)
            code = main(["compare", "--input", str(path), "--ts", "0.1", "--tt", "0.5",
                         "--range", f"{low}:{low + 40}", "--min-sup-count", "1",
                         "--min-sup-count", "2", "--format", "json"])
            assert code == 0
            obj = json.loads(capsys.readouterr().out)
            for row in obj["rows"]:
                assert row["etp_count"] <= row["tp_count"]
                assert row["identical"] is True
