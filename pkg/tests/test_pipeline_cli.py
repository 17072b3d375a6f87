import csv
import io
import json
import subprocess
import sys

import pytest

from helpers import report
from orbicover import cli, fixtures
from orbicover.mcg import MOVE_TABLES
from orbicover.pipeline import CSV_FIELDS, PipelineConfig, report_csv, report_json, report_text, run_pipeline

S = fixtures.S


def run(argv, capsys):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_report_is_identical_across_thread_counts():
    one = report_json(report())
    assert report_json(run_pipeline(PipelineConfig(threads=4))) == one
    assert report_json(run_pipeline(PipelineConfig(threads=2))) == one


def test_report_json_shape():
    data = json.loads(report_json(report()))
    assert data["schema"] == 1
    assert set(data) >= {"table1", "exclusions", "per_case", "holonomy_summary", "discrepancies"}
    assert len(data["table1"]) == 7 and len(data["exclusions"]) == 5 and len(data["per_case"]) == 7
    assert len(data["holonomy_summary"]) == data["signature_class_count"] == 12
    assert sum(not row["holonomy"] for row in data["holonomy_summary"]) == 3
    assert data["final_orbit_count"] == 9


def test_discrepancies_are_computed():
    topics = [d.topic for d in report().discrepancies]
    assert len(topics) == 6
    assert "(1; 2) conjugacy classes" in topics


def test_csv_and_text():
    rows = list(csv.DictReader(io.StringIO(report_csv(report()))))
    assert tuple(rows[0]) == CSV_FIELDS
    assert len(rows) == 12
    assert "9" in report_text(report())


def test_signatures_command(capsys):
    code, out, _ = run(["signatures", "--json"], capsys)
    assert code == 0
    assert len(json.loads(out)["table1"]) == 7
    code, out, _ = run(["signatures"], capsys)
    assert code == 0 and "(0; 2, 2, 2, 3)" in out


def test_enumerate_command_threads(capsys):
    args = ["enumerate", "--signature", "0:2,2,2,3", "--degree", "6", "--json"]
    _, one, _ = run(args + ["--threads", "1"], capsys)
    _, four, _ = run(args + ["--threads", "4"], capsys)
    assert one == four
    assert len(json.loads(one)["classes"]) == 33


def test_orbits_and_classify(capsys, tmp_path):
    out_file = tmp_path / "orbits.json"
    code, _, _ = run(["orbits", "--signature", "0:2,2,2,3", "--degree", "6", "--json", "--out", str(out_file)], capsys)
    assert code == 0
    assert len(json.loads(out_file.read_text())["orbits"]) == 4
    code, out, _ = run(["classify", "--signature", "0:2,2,2,4", "--degree", "6", "--json"], capsys)
    (record,) = json.loads(out)["classes"]
    assert record["holonomy"] is False


@pytest.mark.parametrize(
    "argv",
    [
        ["enumerate", "--signature", "0:2,2,x", "--degree", "3"],
        ["enumerate", "--signature", "0:2,2,2,3", "--degree", "9"],
        ["orbits", "--signature", "0:2,3,7", "--degree", "3"],
    ],
)
def test_invalid_input_exit_code(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 2 and err.startswith("error:")


def test_missing_case_arguments(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["enumerate", "--signature", "0:2,2,2,3"])
    assert exc.value.code == 2


def test_verify_command(capsys):
    code, out, _ = run(["verify", "--threads", "1"], capsys)
    assert code == 0
    assert "checks passed" in out and "FAIL" not in out


def _mutate(monkeypatch):
    table = dict(MOVE_TABLES[("F", 1)])
    table[0] = ((1, 1), (0, 1), (1, -1))
    monkeypatch.setitem(MOVE_TABLES, ("F", 1), table)


def test_verify_command_fails_on_mutated_table(monkeypatch, capsys):
    _mutate(monkeypatch)
    code, out, _ = run(["verify", "--threads", "1"], capsys)
    assert code == 1 and "FAIL" in out


def test_inconsistency_exit_code(monkeypatch, capsys):
    _mutate(monkeypatch)
    code, _, err = run(["orbits", "--signature", "0:2,2,2,3", "--degree", "6", "--threads", "1"], capsys)
    assert code == 3 and "inconsistency" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "orbicover", "signatures"], capture_output=True, text=True)
    assert proc.returncode == 0 and "(1; 2)" in proc.stdout
