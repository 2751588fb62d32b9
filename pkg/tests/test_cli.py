import io
import json
import subprocess
import sys

import pytest

from tsyslab.cli import applicable_checks, load_config, run, UsageError
from tsyslab.rootdata import make_algebra


def _run(argv, monkeypatch=None):
    out = io.StringIO()
    code = run(argv, out)
    return code, out.getvalue()


@pytest.fixture(autouse=True)
def _no_config(monkeypatch):
    monkeypatch.delenv("TSYSLAB_CONFIG", raising=False)


def test_expand_text():
    code, text = _run(["expand", "--algebra", "a2even", "--n", "1"])
    assert code == 0
    lines = text.strip().splitlines()
    assert lines[0] == "T^0(u) = 1" and lines[-1] == "T^3(u) = 1"
    assert len(lines) == 4


def test_expand_json_truncated():
    code, text = _run(["expand", "--algebra", "d3_4", "--cutoff", "2", "--format", "json"])
    data = json.loads(text)
    assert code == 0 and data["cutoff"] == 2 and sorted(data["T"]) == ["0", "1", "2"]


def test_vars():
    code, text = _run(["vars", "--algebra", "a2odd", "--format", "json"])
    data = json.loads(text)
    assert code == 0 and len(data["z"]) == 4 and len(data["x"]) == 4


def test_tableaux_and_beta():
    code, text = _run(["tableaux", "--algebra", "a2even", "--a", "1", "--m", "2"])
    assert code == 0 and "6 tableaux" in text
    code, text = _run(["beta", "--algebra", "a2even", "--n", "1"])
    assert code == 0 and text.strip() == "beta(T^1) = 1 e(1) + 1 e(0) + 1 e(-1)"


def test_check_pass_json():
    code, text = _run(["check", "duality", "--algebra", "a2odd", "--format", "json"])
    data = json.loads(text)
    assert code == 0 and data["status"] == "pass"
    assert data["reports"][0]["check"] == "duality"


def test_check_theta_zero():
    code, text = _run(["check", "tq", "--algebra", "a2even", "--theta-zero", "--format", "json"])
    assert code == 0 and json.loads(text)["theta_zero"] is True


@pytest.mark.parametrize("argv", [
    ["check", "tsystem", "--algebra", "d2"],
    ["check", "d34", "--algebra", "a2even"],
    ["check", "casorati", "--algebra", "d3_4"],
    ["expand", "--algebra", "a2even", "--n", "0"],
    ["expand", "--algebra", "e8"],
    ["tableaux", "--algebra", "a2even", "--a", "5"],
])
def test_usage_errors(argv):
    code, _ = _run(argv)
    assert code == 2


def test_applicable_checks():
    assert applicable_checks(make_algebra("D2", 2)) == ["screening", "tt"]
    assert applicable_checks(make_algebra("D3_4", 2)) == ["d34", "screening", "tt"]
    assert "casorati" in applicable_checks(make_algebra("A2_even", 1))


def test_config_file(tmp_path, monkeypatch):
    cfg = tmp_path / "cfg"
    cfg.write_text("# comment\nformat = json\ncutoff=3\n")
    monkeypatch.setenv("TSYSLAB_CONFIG", str(cfg))
    code, text = _run(["expand", "--algebra", "d2", "--n", "2"])
    assert code == 0 and json.loads(text)["cutoff"] == 3
    # flags win over the file
    code, text = _run(["expand", "--algebra", "d2", "--n", "2", "--cutoff", "2", "--format", "text"])
    assert text.startswith("T^0(u) = 1") and "T^3" not in text


def test_config_errors(tmp_path, monkeypatch):
    bad = tmp_path / "bad"
    bad.write_text("colour = blue\n")
    with pytest.raises(UsageError):
        load_config(str(bad))
    bad.write_text("just words\n")
    with pytest.raises(UsageError):
        load_config(str(bad))
    monkeypatch.setenv("TSYSLAB_CONFIG", str(tmp_path / "missing"))
    assert _run(["vars", "--algebra", "d2"])[0] == 2
    assert load_config(None) == {}


def test_check_all_d34():
    code, text = _run(["check", "all", "--algebra", "d3_4"])
    assert code == 0 and text.strip().endswith("all checks passed")


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "tsyslab.cli", "vars", "--algebra", "a2even"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and "x_3(u)" in proc.stdout
