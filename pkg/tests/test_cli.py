import json

import pytest
from typer.testing import CliRunner

from rank_maps.cli import app
from rank_maps.notation import format_ranking
from rank_maps.oracle import enumerate_weak_orders

runner = CliRunner()


def test_convert_ranking_to_cs_text():
    result = runner.invoke(app, ["convert", "x1 > x2 ~ x3 > x4", "--to", "cs", "--format", "text"])
    assert result.exit_code == 0
    assert result.stdout == "x1:1 x2:2.5 x3:2.5 x4:4\n"


def test_convert_ranking_to_pm_json():
    result = runner.invoke(app, ["convert", "x1 > x2 ~ x3 > x4", "--to", "pm"])
    assert result.exit_code == 0
    assert json.loads(result.stdout)["entries"] == [[1], [2, 3], [2, 3], [4]]


def test_convert_vector_to_ranking():
    result = runner.invoke(app, ["convert", "[1.5, 1.5, 3, 4]", "--to", "ranking", "--format", "text"])
    assert result.exit_code == 0
    assert result.stdout == "x1 ~ x2 > x3 > x4\n"


def test_convert_uses_roster_labels():
    result = runner.invoke(app, ["convert", "[2, 1]", "--to", "ranking", "--labels", "a,b", "--format", "text"])
    assert result.exit_code == 0
    assert result.stdout == "b > a\n"


@pytest.mark.parametrize("n", (1, 2, 3, 4))
def test_three_stage_pipeline_restores_ranking(n):
    for ranking in enumerate_weak_orders(n):
        expression = format_ranking(ranking)
        pm = runner.invoke(app, ["convert", expression, "--to", "pm"])
        cs = runner.invoke(app, ["convert", pm.stdout.strip(), "--to", "cs"])
        back = runner.invoke(app, ["convert", cs.stdout.strip(), "--to", "ranking", "--format", "text"])
        assert (pm.exit_code, cs.exit_code, back.exit_code) == (0, 0, 0)
        assert back.stdout == expression + "\n"


def test_convert_invalid_vector_prints_report():
    result = runner.invoke(app, ["convert", "[1, 2, 2, 4]", "--to", "pm"])
    assert result.exit_code == 1
    report = json.loads(result.stdout)
    assert report["valid"] is False
    assert report["violations"][0]["code"] == "CS_GROUP_ALIGNMENT"


def test_convert_inexact_value_is_invalid():
    result = runner.invoke(app, ["convert", "[1, 2.25]", "--to", "pm", "--format", "text"])
    assert result.exit_code == 1
    assert result.stdout.startswith("CS_NOT_HALF_INTEGER [1]")


@pytest.mark.parametrize(
    "args",
    (
        ["convert", "x1 > > x2", "--to", "pm"],
        ["convert", "{", "--to", "pm"],
        ["convert", "[[1]]", "--to", "pm", "--kind", "ranking"],
        ["check", "--n", "0"],
        ["check", "--n", "9"],
        ["enumerate", "--n", "0"],
    ),
)
def test_unreadable_input_exits_two(args):
    assert runner.invoke(app, args).exit_code == 2


def test_missing_file_exits_two(tmp_path):
    result = runner.invoke(app, ["convert", "--to", "pm", "--file", str(tmp_path / "absent.txt")])
    assert result.exit_code == 2


def test_batch_file_and_output_file(tmp_path):
    batch = tmp_path / "rankings.txt"
    batch.write_text("# two rankings\nx1 > x2\nx2 ~ x1\n", encoding="utf-8")
    out = tmp_path / "out" / "cs.txt"
    result = runner.invoke(app, ["convert", "--to", "cs", "--file", str(batch), "--format", "text", "--out", str(out)])
    assert result.exit_code == 0
    assert out.read_text(encoding="utf-8") == "x1:1 x2:2\nx2:1.5 x1:1.5\n"


def test_convert_reads_stdin():
    result = runner.invoke(app, ["convert", "--to", "cs", "--format", "text"], input="x1 > x2\n")
    assert result.exit_code == 0
    assert result.stdout == "x1:1 x2:2\n"


def test_validate_exit_codes():
    valid = runner.invoke(app, ["validate", "[[1], [2, 3], [2, 3], [4]]"])
    assert valid.exit_code == 0
    assert valid.stdout == "valid\n"

    invalid = runner.invoke(app, ["validate", "[[1, 3], [2], [2], [4]]"])
    assert invalid.exit_code == 1
    assert "PM_NOT_CONSECUTIVE [0]" in invalid.stdout
    assert "PM_MULTIPLICITY_MISMATCH [1,2]" in invalid.stdout


def test_validate_json_format():
    result = runner.invoke(app, ["validate", "[1, 1, 1]", "--format", "json"])
    assert result.exit_code == 1
    assert json.loads(result.stdout)["violations"][0]["indices"] == [0, 1, 2]


def test_check():
    result = runner.invoke(app, ["check", "--n", "4"])
    assert result.exit_code == 0
    assert result.stdout == "n=4 total=75 pm=75 cs=75 failures=0 ok\n"

    as_json = json.loads(runner.invoke(app, ["check", "-n", "3", "--format", "json"]).stdout)
    assert (as_json["total"], as_json["ok"]) == (13, True)


def test_enumerate():
    result = runner.invoke(app, ["enumerate", "--n", "2"])
    assert result.exit_code == 0
    assert result.stdout == "x1 > x2\nx1 ~ x2\nx2 > x1\n"

    listed = json.loads(runner.invoke(app, ["enumerate", "--n", "3", "--format", "json"]).stdout)
    assert len(listed) == 13
