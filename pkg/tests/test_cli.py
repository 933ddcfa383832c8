from __future__ import annotations

import json

import pytest

from quartica.cli import main

PASSING = """field F = Q(i: -1, r2: 2, q2: r2)
let eps = (1+i)*r2/2
lines LF = atlas("fermat.mtl")
assert tvector(LF) == [48, 0, 3]
"""


def test_run_json_report(tmp_path, capsys):
    src = tmp_path / "ok.qsc"
    src.write_text(PASSING)
    assert main(["run", str(src), "--report", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert [c["status"] for c in data["checks"]] == ["pass"]


def test_run_failing_scenario(tmp_path):
    src = tmp_path / "bad.qsc"
    src.write_text(PASSING + "assert tvector(LF) == [66]\n")
    out = tmp_path / "report.txt"
    assert main(["run", str(src), "--out", str(out)]) == 1
    assert "FAIL" in out.read_text()


def test_run_syntax_error(tmp_path, capsys):
    src = tmp_path / "broken.qsc"
    src.write_text("let = 1\n")
    assert main(["run", str(src)]) == 1
    assert "1:5" in capsys.readouterr().err


def test_eval(capsys):
    assert main(["eval", "((1+i)*r2/2)^4", "--field", "Q(i:-1,r2:2)"]) == 0
    assert capsys.readouterr().out.strip() == "-1"
    assert main(["eval", "s5", "--field", "Q(i:-1)"]) == 1


def test_reproduce_section(tmp_path):
    out = tmp_path / "report.json"
    assert main(["reproduce", "--section", "2", "--out", str(out)]) == 0
    data = json.loads(out.read_text())
    assert {c["status"] for c in data["checks"]} <= {"pass", "derived"}


def test_plot(tmp_path):
    out = tmp_path / "f.svg"
    assert main(["plot", "--ids", "fermat.mtp_lines,fermat.mtp", "--chart", "z=1", "--out", str(out)]) == 0
    assert out.read_text().count('id="line-') == 12
    assert main(["plot", "--ids", ""]) == 1


def test_atlas_listing(capsys):
    assert main(["atlas"]) == 0
    assert "fermat.mtl" in capsys.readouterr().out
    assert main(["atlas", "no.such.id"]) == 1


def test_help_exits_cleanly():
    with pytest.raises(SystemExit) as err:
        main(["--help"])
    assert err.value.code == 0
