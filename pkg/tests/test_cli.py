import json

import pytest

from springer2.cli import main, render_document


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_orbits_oo2(capsys):
    code, out, _ = run(capsys, "orbits", "--case", "oo", "--n", "2")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["entries"]) == 5
    assert all(e["group_order"] in (1, 2) for e in doc["entries"])


def test_orbits_sp0_and_ood1(capsys):
    code, out, _ = run(capsys, "orbits", "--case", "sp", "--n", "0")
    assert code == 0
    doc = json.loads(out)
    assert len(doc["entries"]) == 1

    code, out, _ = run(capsys, "orbits", "--case", "ood", "--n", "1")
    assert json.loads(out)["entries"] == [
        {"orbit": "m=0;1_1,1_1", "group_order": 1},
        {"orbit": "m=1;-", "group_order": 1},
    ]


def test_springer_sp1_mapping(capsys):
    code, out, _ = run(capsys, "springer", "--case", "sp", "--n", "1")
    assert code == 0
    doc = json.loads(out)
    mapping = {
        e["orbit"]: e["rows"][0]["symbol"] for e in doc["entries"]
    }
    assert mapping == {"2_1": "A=0,5;B=2", "1_0,1_0": "A=0,4;B=3"}


def test_springer_eo2_degenerate_flag(capsys):
    code, out, _ = run(capsys, "springer", "--case", "eo", "--n", "2")
    doc = json.loads(out)
    total_rows = sum(len(e["rows"]) for e in doc["entries"])
    assert total_rows == 3
    flags = {e["orbit"]: e["degenerate"] for e in doc["entries"]}
    assert flags["2_1,2_1"] is True


def test_springer_oo0(capsys):
    code, out, _ = run(capsys, "springer", "--case", "oo", "--n", "0")
    doc = json.loads(out)
    assert sum(len(e["rows"]) for e in doc["entries"]) == 1


def test_springer_orbit_filter(capsys):
    code, out, _ = run(
        capsys, "springer", "--case", "oo", "--n", "5",
        "--orbit", "4_3,4_3,1_1,1_1,1_1",
    )
    assert code == 0
    doc = json.loads(out)
    assert len(doc["entries"]) == 1
    rows = doc["entries"][0]["rows"]
    assert {r["symbol"] for r in rows} == {
        "A=0,8,16,26;B=6,15,24",
        "A=0,8,16,24;B=6,15,26",
    }


def test_branch_examples(capsys):
    code, out, _ = run(
        capsys, "branch", "--case", "sp", "--n", "2", "--symbol", "A=0,8;B=3"
    )
    assert code == 0
    assert json.loads(out)["targets"] == ["A=0,5;B=2"]

    code, _, err = run(
        capsys, "branch", "--case", "sp", "--n", "1", "--symbol", "A=0,9;B=3"
    )
    assert code == 2
    assert "error" in err


def test_bad_usage_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["orbits", "--case", "xx", "--n", "1"])
    assert exc.value.code == 2
    capsys.readouterr()

    code, _, err = run(capsys, "orbits", "--case", "sp", "--n", "2",
                       "--orbit", "Z_9")
    assert code == 2


def test_verify_small(capsys):
    code, out, err = run(
        capsys, "verify", "--case", "sp", "--max-n", "2", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    assert len(doc["criteria"]) == 10
    assert all(c["ok"] for c in doc["criteria"])
    assert err.count("PASS") == 10


def test_output_deterministic(capsys):
    _, out1, _ = run(capsys, "springer", "--case", "spd", "--n", "3")
    _, out2, _ = run(capsys, "springer", "--case", "spd", "--n", "3")
    assert out1 == out2


def test_formats(capsys):
    code, out, _ = run(
        capsys, "orbits", "--case", "eo", "--n", "2", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "case,n,orbit,group_order,degenerate"
    assert len(lines) == 4

    code, out, _ = run(
        capsys, "orbits", "--case", "eo", "--n", "2", "--format", "tex"
    )
    assert out.startswith(r"\begin{tabular}")
    assert r"2\_1" in out


def test_render_document_shapes():
    doc = {"command": "branch", "symbol": "A=0;B=", "targets": []}
    text = render_document(doc, "csv")
    assert text.splitlines()[0] == "symbol,target"
