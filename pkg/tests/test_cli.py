import json
import subprocess
import sys

import pytest

from cptweyl.cli import main
from cptweyl.exactcore import build, dump_matrices


def test_catalogue_lists_names_and_errata(capsys):
    assert main(["catalogue"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert "K3" in out and "TOF" in out
    assert any(line.startswith("y ") and "y_corrected" in line for line in out)


def test_state_text_and_json(capsys):
    assert main(["state", "--matrix", "K3", "--row", "0"]) == 0
    out = capsys.readouterr().out
    assert "class    = CPT-type" in out and "tau3     = 0.25" in out
    assert main(["state", "--matrix", "x", "--row", "3", "--json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["class"] == "GHZ-type" and doc["tau3"] == 1.0
    assert doc["state_source"] == {"matrix": "x", "row": 3}


def test_state_reports_transcription_failure(capsys):
    assert main(["state", "--matrix", "y", "--row", "0"]) == 2
    err = capsys.readouterr().err
    assert "y" in err and "(row " in err
    assert main(["state", "--matrix", "nope", "--row", "0"]) == 2


def test_order_from_files_and_names(tmp_path, capsys):
    path = tmp_path / "gens.json"
    dump_matrices([build("x"), build("y_corrected")], path)
    assert main(["order", "--gens", str(path)]) == 0
    assert capsys.readouterr().out.strip() == "120"
    assert main(["order", "--names", "i3", "j3", "K3"]) == 0
    assert capsys.readouterr().out.strip() == "16"


def test_order_cap_exceeded(capsys):
    assert main(["order", "--names", "x", "y_corrected", "--cap", "5"]) == 2
    assert "cap" in capsys.readouterr().err


def test_identify(capsys):
    assert main(["identify", "--names", "W", "Z", "c"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert json.loads(lines[0])["order"] == 16
    assert lines[1] == "[16,13] (fingerprint-consistent)"
    assert main(["identify", "--names", "R", "S"]) == 0
    assert capsys.readouterr().out.splitlines()[1].startswith("Unknown")


def test_identify_large_group_falls_back_to_order(capsys):
    assert main(["identify", "--names", "x", "y_corrected", "--cap", "100"]) == 0
    fp = json.loads(capsys.readouterr().out.splitlines()[0])
    assert fp["order"] == 120 and fp["order_histogram"] is None


def test_no_generators():
    with pytest.raises(SystemExit):
        main(["order"])


def test_verify_filtered_exit_code_and_json(tmp_path, capsys):
    out = tmp_path / "report.json"
    assert main(["verify", "--claim", "TANGLE.W.*", "--json", str(out), "--no-cache"]) == 0
    table = capsys.readouterr().out
    assert "4 claims: 3 pass, 0 fail, 1 discrepancy-reported" in table
    doc = json.loads(out.read_text(encoding="utf-8"))
    assert [r["id"] for r in doc["results"]] == [
        "TANGLE.W.CLASS", "TANGLE.W.CONCURRENCE", "TANGLE.W.ONE", "TANGLE.W.TAU3"]


def test_module_entry_point_is_utf8(tmp_path):
    proc = subprocess.run(
        [sys.executable, "-m", "cptweyl.cli", "catalogue"],
        capture_output=True, env={"PYTHONIOENCODING": "ascii", "PATH": ""}, check=True)
    assert "1⊗CZ".encode() in proc.stdout
