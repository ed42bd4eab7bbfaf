import json

import pytest

from taftdouble.cli import main
from taftdouble.verify import check_ids, emit_report, run_suite


def test_run_suite_single_selection():
    report = run_suite(3, ["charpoly-table"])
    assert [c.id for c in report.checks] == ["charpoly-table"]
    assert report.all_pass


def test_run_suite_rejects_bad_input():
    with pytest.raises(ValueError, match="odd"):
        run_suite(4)
    with pytest.raises(ValueError, match="odd"):
        run_suite(15)  # beyond the default bound
    with pytest.raises(ValueError, match="unknown"):
        run_suite(3, ["nope"])


def test_max_n_override(monkeypatch):
    monkeypatch.setenv("TAFTDOUBLE_MAX_N", "5")
    with pytest.raises(ValueError):
        run_suite(7, ["charpoly-table"])
    monkeypatch.delenv("TAFTDOUBLE_MAX_N")
    assert run_suite(7, ["charpoly-table"]).all_pass


def test_report_serialization():
    report = run_suite(3, ["charpoly-table", "fusion-matrix", "oracle-concordance"])
    as_json = emit_report(report, "json")
    parsed = json.loads(as_json)
    assert parsed["n"] == 3 and parsed["all_pass"] is True
    assert [c["id"] for c in parsed["checks"]] == [
        "charpoly-table",
        "fusion-matrix",
        "oracle-concordance",
    ]
    assert all(c["oracle_residual"] < 1e-9 for c in parsed["checks"])
    text = emit_report(report, "text")
    assert "✓" in text and "all checks passed" in text
    with pytest.raises(ValueError):
        emit_report(report, "yaml")
    # identical runs serialize identically
    again = emit_report(run_suite(3, ["charpoly-table", "fusion-matrix", "oracle-concordance"]), "json")
    stripped = lambda s: "\n".join(
        line for line in s.splitlines() if '"elapsed"' not in line
    )
    assert stripped(again) == stripped(as_json)


def test_check_registry_is_complete():
    ids = check_ids()
    assert "oracle-concordance" in ids
    assert len(ids) == len(set(ids))


def test_cli_verify_exit_codes(capsys):
    assert main(["verify", "--n", "3", "--suite", "charpoly-table"]) == 0
    out = capsys.readouterr().out
    assert "charpoly-table" in out
    assert main(["verify", "--n", "4"]) == 2
    assert main(["verify", "--n", "3", "--suite", "bogus"]) == 2


def test_failing_check_reports_and_exits_nonzero(capsys, monkeypatch):
    import taftdouble.verify as verify_mod

    def broken(ws):
        assert False, "deliberately broken for the failure-path test"

    monkeypatch.setitem(verify_mod.CHECKS, "charpoly-table", broken)
    report = run_suite(3, ["charpoly-table", "oracle-concordance"])
    assert not report.all_pass
    failed = report.checks[0]
    assert failed.status == "fail" and not failed.exact
    assert "deliberately broken" in failed.detail["counterexample"]
    # a check that fails both routes is consistent, so concordance itself passes
    assert report.checks[-1].id == "oracle-concordance"
    assert report.checks[-1].status == "pass"
    assert main(["verify", "--n", "3", "--suite", "charpoly-table"]) == 1
    out = capsys.readouterr().out
    assert "✗" in out and "FAILURES" in out


def test_cli_verify_json(capsys):
    assert main(["verify", "--n", "3", "--suite", "fusion-matrix", "--format", "json"]) == 0
    parsed = json.loads(capsys.readouterr().out)
    assert parsed["all_pass"] is True


def test_cli_mckay(capsys):
    assert main(["mckay", "--n", "3", "--module", "2,0", "--format", "csv"]) == 0
    rows = capsys.readouterr().out.strip().splitlines()
    assert len(rows) == 9
    assert rows[0].split(",")[3] == "1"
    assert main(["mckay", "--n", "3", "--module", "2,0", "--format", "json"]) == 0
    parsed = json.loads(capsys.readouterr().out)
    assert parsed["rows"][6][0] == 2
    assert main(["mckay", "--n", "3", "--module", "2,0", "--closed-form"]) == 0
    closed = json.loads(capsys.readouterr().out)
    assert closed["rows"] == parsed["rows"]
    assert main(["mckay", "--n", "3", "--module", "9,0"]) == 2


def test_cli_chartable(capsys):
    assert main(["chartable", "--n", "3"]) == 0
    parsed = json.loads(capsys.readouterr().out)
    dims = [entry["value"] for entry in parsed["values"]]
    assert dims == [1, 1, 1, 2, 2, 2, 3, 3, 3]
    assert main(["chartable", "--n", "3", "--monomial", "1,2,0", "--format", "csv"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("ell,r,value")
    assert main(["chartable", "--n", "3", "--monomial", "1,2"]) == 2


def test_cli_spectrum(capsys):
    assert main(["spectrum", "--n", "3", "--fusion", "--idempotents"]) == 0
    parsed = json.loads(capsys.readouterr().out)
    assert len(parsed["certificates"]) == 6
    assert all(c["exact"] for c in parsed["certificates"])
    assert all(c["oracle_residual"] < 1e-9 for c in parsed["certificates"])
    assert len(parsed["fusion"]["rows"]) == 6
    assert len(parsed["idempotents"]["components"]) == 3


def test_cli_fusion_and_idempotents(capsys):
    assert main(["fusion", "--n", "3"]) == 0
    parsed = json.loads(capsys.readouterr().out)
    assert parsed["fusion"]["slots"][0] == [3, 0]
    assert main(["idempotents", "--n", "3"]) == 0
    parsed = json.loads(capsys.readouterr().out)
    assert parsed["components"][0]["nu"] == [1]


def test_cli_cheb(capsys):
    assert main(["cheb", "--kind", "U", "--k", "2", "--format", "json"]) == 0
    parsed = json.loads(capsys.readouterr().out)
    assert parsed["coeffs"] == [-1, 0, 1]
    assert main(["cheb", "--kind", "L", "--k", "3", "--format", "text"]) == 0
    assert "t^3" in capsys.readouterr().out
    assert main(["cheb", "--kind", "X", "--k", "1"]) == 2
    assert main(["cheb", "--kind", "U", "--k", "-1"]) == 2
