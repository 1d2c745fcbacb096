from __future__ import annotations

import json
import subprocess
import sys

import pytest

from wittflag.cli import main, parse_blocks


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_json(capsys):
    code, out, _ = run(capsys, "compute", "--type", "C", "--m", "1", "--blocks", "1",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["ranks"] == {"0": 2, "-1": 1, "-2": 0, "-3": 1}
    assert data["params"] == {"m": 1, "blocks": [1]}


def test_compute_text(capsys):
    code, out, _ = run(capsys, "compute", "--type", "A", "--blocks", "1,1,1")
    assert code == 0
    assert "v_1 in W^-1" in out


@pytest.mark.parametrize("argv", [
    ["compute", "--type", "A", "--blocks", "0"],
    ["compute", "--type", "B", "--blocks", "1"],
    ["compute", "--type", "A", "--m", "2", "--blocks", "1"],
    ["compute", "--type", "A", "--blocks", "x"],
    ["verify", "--suite", "nope"],
    ["table", "--type", "A", "--max-n", "20"],
    [],
])
def test_usage_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert len(err.strip().splitlines()) == 1


def test_parse_blocks():
    assert parse_blocks("3, 5") == (3, 5)
    assert parse_blocks("") == ()


def test_verify_appendix(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "appendix", "--max-size", "10")
    assert code == 0
    assert "FAIL" not in out and out.strip().endswith("0 failed")


def test_verify_examples(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "examples")
    assert code == 0
    assert "PASS examples mu(3,5)[4]" in out


def test_verify_series(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "series")
    assert code == 0 and "FAIL" not in out


def test_table_type_a(capsys):
    code, out, _ = run(capsys, "table", "--type", "A", "--max-n", "5", "--jobs", "1")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines() if line.startswith("{")]
    # partitions of 2..5 into at least two blocks: 1 + 2 + 4 + 6
    assert len(rows) == 13
    assert all(len(r["params"]["blocks"]) >= 2 for r in rows)
    assert out.strip().splitlines()[-1].endswith("0 check failures")


def test_table_type_c_enumeration(capsys):
    code, out, _ = run(capsys, "table", "--type", "C", "--max-n", "4", "--jobs", "1")
    assert code == 0
    rows = [json.loads(line) for line in out.splitlines() if line.startswith("{")]
    sums = {r["params"]["m"] + sum(r["params"]["blocks"]) for r in rows}
    assert sums == {1, 2, 3, 4}


def test_table_type_d_has_additive_row(capsys):
    code, out, _ = run(capsys, "table", "--type", "D", "--max-n", "4", "--jobs", "2")
    assert code == 0
    assert any('"ADDITIVE_ONLY"' in line for line in out.splitlines())


def test_table_parallel_output_is_deterministic(capsys):
    _, serial, _ = run(capsys, "table", "--type", "B", "--max-n", "4", "--jobs", "1")
    _, parallel, _ = run(capsys, "table", "--type", "B", "--max-n", "4", "--jobs", "3")
    assert serial == parallel


def test_selfcheck(capsys):
    code, out, _ = run(capsys, "selfcheck")
    assert code == 0 and "FAIL" not in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wittflag", "compute", "--type", "A",
                           "--blocks", "1,2", "--format", "json"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ranks"]["0"] == 1
