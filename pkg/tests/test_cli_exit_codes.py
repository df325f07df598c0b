import json

from springer2 import cli
from springer2.verify import CriterionResult


def test_verify_failure_exits_1(monkeypatch, capsys):
    def fake_run(cases, max_n):
        return [
            CriterionResult(1, "good", True, ""),
            CriterionResult(2, "bad", False, "witness"),
        ]

    monkeypatch.setattr(cli, "run_verification", fake_run)
    code = cli.main(["verify", "--case", "sp", "--max-n", "1"])
    out, err = capsys.readouterr()
    assert code == 1
    assert "FAIL  2 bad (witness)" in err
    doc = json.loads(out)
    assert doc["criteria"][1]["ok"] is False


def test_failing_result_line():
    line = CriterionResult(3, "name", False, "why").line()
    assert line == "FAIL  3 name (why)"
