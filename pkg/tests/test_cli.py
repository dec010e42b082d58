import json

import pytest

from histmech.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_list(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    ids = [line.split("\t")[0] for line in out.splitlines()]
    assert ids == sorted(ids) and "moon-fall" in ids and len(ids) >= 22


def test_run_markdown_and_json(capsys):
    code, out, _ = run(capsys, "run", "cycloid-area")
    assert code == 0 and "REFUTED" in out
    code, out, _ = run(capsys, "run", "tides-period", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["verdict"] == "REFUTED" and doc["matches_expectation"]


def test_run_mismatch_exits_one(capsys):
    code, _, _ = run(capsys, "run", "venus-nonlinearity")
    assert code == 1


def test_unknown_claim_exits_two(capsys):
    code, _, err = run(capsys, "run", "moon-fal")
    assert code == 2 and "moon-fall" in err


def test_usage_errors_exit_two(capsys):
    for argv in ([], ["frobnicate"], ["emit", "venus-phases"], ["emit", "venus-phases", "--format", "xml"]):
        with pytest.raises(SystemExit) as info:
            main(argv)
        assert info.value.code == 2
    capsys.readouterr()


def test_emit_stdout_and_file(capsys, tmp_path):
    code, out, _ = run(capsys, "emit", "hipparchus-combinatorics", "--format", "csv")
    assert code == 0 and out.startswith("n,count\n1,1\n") and "10,103049\n" in out
    target = tmp_path / "v.json"
    code, _, _ = run(capsys, "emit", "venus-phases", "--format", "json", "--out", str(target))
    assert code == 0 and json.loads(target.read_text())["claim_id"] == "venus-phases"


def test_emit_without_series_exits_two(capsys):
    code, _, err = run(capsys, "emit", "wreath", "--format", "csv")
    assert code == 2 and "wreath" in err


def test_report_json_to_file(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, err = run(capsys, "report", "--format", "json", "--parallel", "4", "--out", str(target))
    doc = json.loads(target.read_text())
    assert out == ""
    assert doc["summary"]["total"] >= 22
    assert code == (0 if doc["summary"]["mismatched"] == 0 else 1)
    assert ("venus-nonlinearity" in err) == (code == 1)


def test_config_file_and_env(capsys, tmp_path, monkeypatch):
    cfg = tmp_path / "h.cfg"
    cfg.write_text("constants.g = 4.0\n")
    code, out, _ = run(capsys, "run", "centrifugal-extrusion", "--config", str(cfg), "--format", "json")
    assert code == 1 and json.loads(out)["computed"]["value"] != pytest.approx(288.6, abs=0.1)
    monkeypatch.setenv("HISTMECH_CONFIG", str(cfg))
    code, _, _ = run(capsys, "run", "centrifugal-extrusion")
    assert code == 1


def test_bad_config_exits_two(capsys, tmp_path):
    cfg = tmp_path / "bad.cfg"
    cfg.write_text("tolerance.no-such-claim.abs = 1\n")
    code, _, err = run(capsys, "report", "--config", str(cfg))
    assert code == 2 and "no-such-claim" in err
    code, _, _ = run(capsys, "report", "--config", str(tmp_path / "missing.cfg"))
    assert code == 2
