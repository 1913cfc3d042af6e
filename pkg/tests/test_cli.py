"""Command line behaviour: formats, exit codes, guard handling."""

import json

import pytest

from altcurves.cli import CONFIG_COLUMNS, REPORT_COLUMNS, main

from conftest import FIXTURE_DIR, fixture_path

TREFOIL = str(fixture_path("k3_1"))
BORROMEAN = str(fixture_path("borromean"))
GRANNY = str(fixture_path("granny"))


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv("ALTCURVES_GUARD_CAP", raising=False)


def test_version(capsys):
    with pytest.raises(SystemExit) as exit_:
        main(["--version"])
    assert exit_.value.code == 0
    assert "altcurves" in capsys.readouterr().out


def test_validate_ok_text(capsys):
    assert main(["validate", TREFOIL]) == 0
    out = capsys.readouterr().out
    assert "ok (n=3, faces=5)" in out


def test_validate_failure_text(capsys):
    assert main(["validate", GRANNY, TREFOIL]) == 1
    out = capsys.readouterr().out
    assert "FAIL" in out
    assert "2-edge cut" in out


def test_validate_json(capsys):
    assert main(["validate", "--format", "json", GRANNY]) == 1
    record = json.loads(capsys.readouterr().out)
    assert record["type"] == "validation"
    assert record["schema_version"] == 1
    assert record["ok"] is False
    assert record["alternating"] is True
    assert record["prime"] is False
    assert record["failures"]


def test_validate_unreadable_file(capsys):
    assert main(["validate", "/no/such/file.pd"]) == 2
    assert "error:" in capsys.readouterr().err


def test_validate_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.pd"
    bad.write_text("X 1 2 3\n")
    assert main(["validate", str(bad)]) == 2
    assert "error:" in capsys.readouterr().err


def test_enumerate_text(capsys):
    assert main(["enumerate", TREFOIL]) == 0
    out = capsys.readouterr().out
    assert "total=3 (pppp=3, psps_pair=0, other=0)" in out
    assert out.count("[pppp]") == 3


def test_enumerate_csv(capsys):
    assert main(["enumerate", "--format", "csv", TREFOIL]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == ",".join(CONFIG_COLUMNS)
    assert len(lines) == 4
    first = lines[1].split(",")
    assert first[0] == "pppp"
    assert first[5] == "2"  # chi
    assert first[6] == "6"  # tubings


def test_enumerate_json(capsys):
    assert main(["enumerate", "--format", "json", BORROMEAN]) == 0
    records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [r["type"] for r in records] == ["configuration"] * 9 + ["summary"]
    summary = records[-1]
    assert summary["counts"] == {"pppp": 6, "psps_pair": 3, "other": 0, "total": 9}
    assert summary["crossings"] == 6
    assert isinstance(summary["visited"], int)
    pairs = [r for r in records if r.get("family") == "psps_pair"]
    assert len(pairs) == 3
    assert all(r["tubings"] == 4 for r in pairs)
    assert all(r["words_minus"] for r in pairs)


def test_enumerate_out_file(tmp_path, capsys):
    out = tmp_path / "configs.csv"
    assert main(["enumerate", "--format", "csv", "--out", str(out), TREFOIL]) == 0
    assert capsys.readouterr().out == ""
    assert out.read_text().startswith(",".join(CONFIG_COLUMNS))


def test_enumerate_patterns(capsys):
    assert main(["enumerate", "--patterns", "pppp", BORROMEAN]) == 0
    out = capsys.readouterr().out
    assert "total=6 (pppp=6, psps_pair=0, other=0)" in out


def test_enumerate_bad_pattern(capsys):
    assert main(["enumerate", "--patterns", "PXQ", TREFOIL]) == 2
    assert "words over P and S" in capsys.readouterr().err


def test_enumerate_guard_flag(capsys):
    assert main(["enumerate", "--genus", "9", "--guard-cap", "2000", TREFOIL]) == 3
    assert "guard tripped" in capsys.readouterr().err


def test_enumerate_guard_env(monkeypatch, capsys):
    monkeypatch.setenv("ALTCURVES_GUARD_CAP", "2000")
    assert main(["enumerate", "--genus", "9", TREFOIL]) == 3
    capsys.readouterr()
    # an explicit flag beats the environment
    assert main(["enumerate", "--genus", "3", "--guard-cap", "100000", TREFOIL]) == 0


def test_enumerate_guard_env_malformed(monkeypatch, capsys):
    monkeypatch.setenv("ALTCURVES_GUARD_CAP", "plenty")
    assert main(["enumerate", "--genus", "3", TREFOIL]) == 2
    assert "ALTCURVES_GUARD_CAP" in capsys.readouterr().err


def test_enumerate_genus3(capsys):
    assert main(["enumerate", "--genus", "3", TREFOIL]) == 0
    assert "total=15" in capsys.readouterr().out


def test_bounds_text(capsys):
    assert main(["bounds", TREFOIL]) == 0
    out = capsys.readouterr().out
    assert "pppp" in out and "VIOLATED" not in out
    assert "<= 30" in out
    assert "<= 54" in out


def test_bounds_json(capsys):
    assert main(["bounds", "--format", "json", BORROMEAN]) == 0
    record = json.loads(capsys.readouterr().out)
    assert record["type"] == "bounds"
    assert record["all_ok"] is True
    assert record["counts"]["surfaces"] == 6 * 6 + 3 * 4
    assert record["bounds"]["surfaces"] == 12 * 6**3


def test_report_directory_text(capsys):
    assert main(["report", str(FIXTURE_DIR)]) == 0
    out = capsys.readouterr().out
    assert "16 diagrams, all_ok=True" in out
    assert "INVALID" not in out


def test_report_invalid_member(capsys):
    assert main(["report", GRANNY, TREFOIL]) == 1
    out = capsys.readouterr().out
    assert "INVALID" in out
    assert "bounds_ok=True" in out


def test_report_empty_directory(tmp_path, capsys):
    assert main(["report", str(tmp_path)]) == 2
    assert "no .pd diagrams found" in capsys.readouterr().err


def test_report_malformed_member(tmp_path, capsys):
    bad = tmp_path / "bad.pd"
    bad.write_text("X 1 2 3\n")
    assert main(["report", str(bad), TREFOIL]) == 2
    assert str(bad) in capsys.readouterr().err


def test_report_csv_and_parallel_determinism(tmp_path, capsys):
    serial = tmp_path / "serial.csv"
    parallel = tmp_path / "parallel.csv"
    assert main(["report", "--format", "csv", "--out", str(serial),
                 str(FIXTURE_DIR)]) == 0
    assert main(["report", "--format", "csv", "--out", str(parallel),
                 "--jobs", "8", str(FIXTURE_DIR)]) == 0
    capsys.readouterr()
    assert serial.read_bytes() == parallel.read_bytes()
    lines = serial.read_text().splitlines()
    assert lines[0] == ",".join(REPORT_COLUMNS)
    assert len(lines) == 17


def test_report_json_summary_last(capsys):
    assert main(["report", "--format", "json", TREFOIL, BORROMEAN]) == 0
    records = [json.loads(line) for line in capsys.readouterr().out.splitlines()]
    assert [r["type"] for r in records] == ["report-row", "report-row", "report-summary"]
    assert records[-1] == {
        "type": "report-summary", "schema_version": 1,
        "diagrams": 2, "all_ok": True,
    }


def test_report_render_directory(tmp_path, capsys):
    out_dir = tmp_path / "svg"
    assert main(["report", "--render", str(out_dir), TREFOIL, BORROMEAN]) == 0
    capsys.readouterr()
    made = sorted(p.name for p in out_dir.glob("*.svg"))
    assert made == ["borromean.svg", "k3_1.svg"]
    assert out_dir.joinpath("k3_1.svg").read_text().startswith("<svg")


def test_render_plain(capsys):
    assert main(["render", TREFOIL]) == 0
    out = capsys.readouterr().out
    assert out.startswith("<svg")
    assert 'class="arc"' in out
    assert 'class="curve"' not in out


def test_render_with_configuration(tmp_path, capsys):
    out = tmp_path / "k3.svg"
    assert main(["render", "--config", "0", "--out", str(out), TREFOIL]) == 0
    text = out.read_text()
    assert 'class="curve"' in text


def test_render_config_out_of_range(capsys):
    assert main(["render", "--config", "99", TREFOIL]) == 2
    assert "out of range" in capsys.readouterr().err
