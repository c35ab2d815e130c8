"""Tests for the command-line runner and report emission."""

import json

from gliderlab.cases import CASES, ConfigError, run_case
from gliderlab.cli import main
from gliderlab.report import Report


def test_list_names_all_cases(capsys):
    assert main(["list"]) == 0
    out = capsys.readouterr().out.split()
    assert out == list(CASES)


def test_run_known_case(capsys, tmp_path):
    path = tmp_path / "report.json"
    assert main(["run", "weyl-holonomic", "--json", str(path)]) == 0
    doc = json.loads(path.read_text())
    assert set(doc) == {"reports"}
    rep = doc["reports"][0]
    assert rep["case"] == "weyl-holonomic"
    assert set(rep["bounds"]) == {"B", "depth", "power"}
    for check in rep["checks"]:
        assert set(check) == {"name", "status", "witness", "anchor"}
        assert check["status"] in ("pass", "fail", "inconclusive")


def test_unknown_case_is_config_error(capsys):
    assert main(["run", "nope"]) == 2
    assert "config error" in capsys.readouterr().err


def test_bad_bound_is_config_error(capsys):
    assert main(["run", "weyl-holonomic", "--bound", "-3"]) == 2


def test_json_deterministic(tmp_path, capsys):
    a = tmp_path / "a.json"
    b = tmp_path / "b.json"
    main(["run", "weyl-holonomic", "--json", str(a)])
    main(["run", "weyl-holonomic", "--json", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_report_statuses():
    rep = Report("demo", {"B": 4})
    rep.add("a", True)
    rep.add("b", False, witness="w")
    rep.add("c", None)
    assert [c.status for c in rep.checks] == ["pass", "fail", "inconclusive"]
    assert rep.any_fail() and not rep.all_pass()
    text = rep.to_text()
    assert "1 pass, 1 fail, 1 inconclusive" in text


def test_tight_bound_degrades_to_inconclusive_not_fail():
    # shrinking the window may make checks inconclusive but never flips
    # a pass into a fail
    rep = run_case("cusp", {"B": 2})
    assert not rep.any_fail()
    assert any(c.status == "inconclusive" for c in rep.checks)


def test_config_error_on_unknown_bound_key():
    import pytest

    with pytest.raises(ConfigError):
        run_case("cusp", {"sides": 3})
