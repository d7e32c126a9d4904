"""Command line entry points: output shape, determinism, exit codes."""

from __future__ import annotations

import json
import subprocess
import sys

from dnsca.cli import main


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def test_evolve_text_output(capsys):
    code, out = _run(capsys, [
        "evolve", "--n", "4", "--carrier", "2", "--steps", "1",
        "--state", "2/-3 1/3", "--length", "6"])
    assert code == 0
    blocks = out.strip().split("\n\n")
    assert len(blocks) == 2
    assert blocks[0].splitlines()[0] == "t=0"
    assert blocks[1].splitlines()[0] == "t=1"


def test_evolve_json_moves_soliton(capsys):
    argv = ["evolve", "--n", "4", "--carrier", "2", "--steps", "1",
            "--state", "2/-3 1/3", "--length", "6", "--json"]
    code, out = _run(capsys, argv)
    assert code == 0
    doc = json.loads(out)
    assert doc["energy"] == 2
    assert doc["states"][0][:2] == ["2/-3", "1/3"]
    assert doc["states"][1][:4] == ["1/2", "1/2", "2/-3", "1/3"]
    code2, out2 = _run(capsys, argv)
    assert (code2, out2) == (code, out)


def test_rmatrix_worked_example(capsys):
    code, out = _run(capsys, [
        "rmatrix", "--family", "two_row", "--n", "4", "--s", "2",
        "--left=-4/4", "--right", "1/2"])
    assert code == 0
    assert out.strip() == "e . 1-4/24  H=-1"


def test_rmatrix_one_row_json(capsys):
    code, out = _run(capsys, [
        "rmatrix", "--family", "one_row", "--n", "4",
        "--left", "112", "--right", "2-1", "--json"])
    assert code == 0
    assert json.loads(out) == {"left": "11", "right": "22-1", "h": -3}


def test_solitons_detects_labels(capsys):
    code, out = _run(capsys, [
        "solitons", "--n", "4",
        "--state", "1/2 2/-3 2/3 1/3 1/2 1/2 1/4 1/2"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("start=1 length=3")
    assert lines[1].startswith("start=6 length=1")


def test_solitons_rejects_junk(capsys):
    code, out = _run(capsys, ["solitons", "--n", "4", "--state", "1/-2 3/-3"])
    assert code == 1
    assert "not a union of solitons" in out


def test_verify_suite_passes(capsys):
    code, out = _run(capsys, ["verify", "--suite", "rmatrix", "--n", "4"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines and all(line.startswith("PASS") for line in lines)


def test_console_script_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "dnsca.cli", "verify", "--suite", "insertion",
         "--n", "4"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert "PASS" in proc.stdout and "FAIL" not in proc.stdout
