import json

import pytest

from simulpal import cli
from simulpal.radix import DomainError


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out), err


def test_parse_exact_int():
    assert cli.parse_exact_int("123") == 123
    assert cli.parse_exact_int("1e18") == 10**18
    assert cli.parse_exact_int("2.65e15") == 2_650_000_000_000_000
    with pytest.raises(DomainError):
        cli.parse_exact_int("1.5")
    with pytest.raises(DomainError):
        cli.parse_exact_int("ten")


def test_check_exit_codes(capsys):
    code, doc, _ = run_json(capsys, "check", "585", "--bases", "10,2")
    assert code == 0
    assert doc["results"] == {"10": True, "2": True}
    code, doc, _ = run_json(capsys, "check", "10", "--bases", "10")
    assert code == 1 and doc["results"]["10"] is False
    code, doc, _ = run_json(capsys, "check", "5415589", "--bases", "2,3")
    assert code == 0


def test_check_validation_exit(capsys):
    code, out, err = run(capsys, "check", "585", "--bases", "1")
    assert code == 2 and "error" in err


def test_search_report(capsys):
    code, doc, _ = run_json(capsys, "search", "10", "2", "1e5")
    assert code == 0
    assert doc["command"] == "search"
    assert doc["parameters"]["bound"] == 100000
    assert doc["results"]["count"] == 18
    assert doc["results"]["palindromes"][:5] == [1, 3, 5, 7, 9]
    assert doc["results"]["palindromes"][-1] == 73737


def test_search_reports_are_deterministic(capsys):
    def snapshot():
        code, out, _ = run(capsys, "search", "10", "2", "1e4")
        doc = json.loads(out)
        del doc["timing_seconds"]
        return code, json.dumps(doc, indent=2)

    assert snapshot() == snapshot()


def test_search_csv(capsys):
    code, out, _ = run(capsys, "search", "10", "2", "100", "--format", "csv")
    assert code == 0
    assert out.splitlines() == ["palindrome", "1", "3", "5", "7", "9", "33", "99"]


def test_count_command(capsys):
    code, doc, _ = run_json(capsys, "count", "10", "2", "1e5")
    assert code == 0 and doc["results"] == {"count": 18}


def test_search_checkpoint_and_resume(capsys, tmp_path):
    path = str(tmp_path / "cp.json")
    code1, doc1, _ = run_json(capsys, "search", "10", "2", "1e5", "--checkpoint", path)
    code2, doc2, _ = run_json(capsys, "search", "10", "2", "1e5", "--resume", path)
    assert code1 == code2 == 0
    assert doc1["results"] == doc2["results"]
    assert doc2["checkpoint_path"] == path


def test_resume_mismatch_exit_code(capsys, tmp_path):
    path = str(tmp_path / "cp.json")
    run(capsys, "search", "10", "2", "1e5", "--checkpoint", path)
    code, out, err = run(capsys, "search", "10", "2", "1e6", "--resume", path)
    assert code == 3 and "checkpoint" in err


def test_search_progress_on_stderr(capsys):
    code, out, err = run(capsys, "search", "10", "2", "1000", "--progress")
    assert code == 0
    assert "length" in err
    json.loads(out)  # stdout stays a clean JSON document


def test_family_certified(capsys):
    code, doc, _ = run_json(capsys, "family", "9", "10", "2")
    assert code == 0
    res = doc["results"]
    assert res["status"] == "complete" and res["branch"] == "dependent"
    assert res["shifts"] == [1, 3] and res["values"] == [99, 9009]
    assert res["witness"]["r"] == 1 and res["witness"]["degenerate"] is True
    assert res["dependent_sieve"]["survivors"] == []


def test_family_independent_trail(capsys):
    code, doc, _ = run_json(capsys, "family", "74", "10", "2")
    assert code == 0
    res = doc["results"]
    assert res["branch"] == "independent"
    assert res["shifts"] == [2] and res["values"] == [7447]
    assert res["pair_used"]["q"] > 0 and res["reduced_bound"] <= 81


def test_family_rejected_prefix(capsys):
    code, out, err = run(capsys, "family", "20", "10", "2")
    assert code == 2 and "divides" in err


def test_family_undecided_exit_code(capsys, monkeypatch):
    from simulpal.reduction import FamilyReport

    def fake(a, g, h, **kwargs):
        return FamilyReport(
            a=a, g=g, h=h, alpha=None, ns=(2,), status="undecided", branch="independent",
            bound=10**9, reduced_bound=None, pair_used=None, dependent_result=None,
            witness=None, tested_upper=50, undecided_above=50,
        )

    monkeypatch.setattr(cli.reduction, "verify_family", fake)
    code, doc, _ = run_json(capsys, "family", "74", "10", "2")
    assert code == 4
    assert doc["results"]["undecided_above"] == 50


def test_bound_report(capsys):
    code, doc, _ = run_json(capsys, "bound", "999999", "10", "2")
    assert code == 0
    val = doc["results"]["shift_exponent_bound"]
    assert val["value"] <= 2.65e15 and abs(val["log10"] - 15.42) < 0.01
    assert "three_log_solved" in doc["results"]["shift_exponent_terms"]
    assert "zero_run_threshold" not in doc["results"]


def test_bound_report_with_shift(capsys):
    code, doc, _ = run_json(capsys, "bound", "1", "10", "2", "1000000")
    assert code == 0
    assert doc["results"]["zero_run_threshold"]["value"] == pytest.approx(1.927e12, rel=1e-3)


def test_bound_validation(capsys):
    code, out, err = run(capsys, "bound", "1", "8", "2")
    assert code == 2


def test_cf_report(capsys):
    code, doc, _ = run_json(capsys, "cf", "10", "2", "8")
    assert code == 0
    assert doc["results"]["quotients"] == [3, 3, 9, 2, 2, 4, 6, 2]
    assert doc["results"]["convergents"][2] == {"p": 93, "q": 28}
    assert doc["results"]["exact"] is False


def test_cf_csv(capsys):
    code, out, _ = run(capsys, "cf", "10", "2", "3", "--format", "csv")
    assert out.splitlines() == ["index,quotient,p,q", "0,3,3,1", "1,3,10,3", "2,9,93,28"]
