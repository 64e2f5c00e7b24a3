import json

from hugheslab.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_analyze_s3(capsys):
    code, out, _ = run(capsys, "analyze", "builtin:S3")
    rep = json.loads(out)
    assert code == 0
    assert rep["order"] == 6 and rep["case"] == "TRIVIAL"
    assert rep["hughes"]["2"]["order"] == 3
    assert rep["frobenius"]["kernel_order"] == 3


def test_analyze_gamma_pi(capsys):
    code, out, _ = run(capsys, "analyze", "builtin:gamma", "--pi", "3,13")
    rep = json.loads(out)
    assert rep["order"] == 1053 and rep["pi"] == [3, 13]
    assert rep["violations"] == []
    assert code in (0, 3)


def test_analyze_table(capsys):
    code, out, _ = run(capsys, "analyze", "builtin:C6", "--table")
    assert code == 0 and out.startswith("C6")


def test_analyze_bad_source(capsys):
    code, _, err = run(capsys, "analyze", "builtin:nope")
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "analyze", "/does/not/exist.jsonl")
    assert code == 2


def test_bad_pi_is_usage_error(capsys):
    code, _, err = run(capsys, "analyze", "builtin:S3", "--pi", "4")
    assert code == 2 and "not prime" in err


def test_scan_empty_catalog(tmp_path, capsys):
    cat = tmp_path / "empty.jsonl"
    cat.write_text("")
    code, out, _ = run(capsys, "scan", str(cat))
    assert code == 0
    assert json.loads(out.splitlines()[-1])["summary"]["records"] == 0


def test_scan_reports_bad_line(tmp_path, capsys):
    cat = tmp_path / "bad.jsonl"
    cat.write_text(
        '{"name": "C3", "degree": 3, "generators": [[1, 2, 0]]}\n'
        '{"name": "broken", "degree": 3, "generators": [[0, 0, 1]]}\n'
    )
    code, out, _ = run(capsys, "scan", "--catalog", str(cat))
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 1
    assert lines[1]["line"] == 2 and "error" in lines[1]
    assert lines[-1]["summary"] == {"records": 1, "errors": 1, "violations": 0, "exceptional": 0}


def test_scan_missing_catalog(capsys):
    code, _, _ = run(capsys, "scan", "/nope.jsonl")
    assert code == 2


def test_construct_then_scan_roundtrip(tmp_path, capsys):
    cat = tmp_path / "c.jsonl"
    code, _, _ = run(capsys, "construct", "S3", "D8", "gamma0", "Q8", "--out", str(cat))
    assert code == 0
    code, out, _ = run(capsys, "scan", str(cat))
    reps = [json.loads(x) for x in out.splitlines()]
    assert code == 0
    assert [r["order"] for r in reps[:-1]] == [6, 8, 351, 8]
    assert reps[-1]["summary"]["violations"] == 0


def test_construct_unknown(capsys):
    code, _, _ = run(capsys, "construct", "monster")
    assert code == 2
    code, _, _ = run(capsys, "construct")
    assert code == 2


def test_hunt_output(capsys):
    code, out, _ = run(capsys, "hunt", "--max-order", "1000")
    lines = [json.loads(x) for x in out.splitlines()]
    assert code == 0 and len(lines) == 31
    assert all(x["status"] == "REJECT" for x in lines[:-1])
    code, out, _ = run(capsys, "hunt", "--unbounded", "--p-max", "7", "--q-max", "5")
    assert any(json.loads(x).get("status") == "PASS" for x in out.splitlines()[:-1])


def test_cap_flag_and_env(capsys, monkeypatch):
    code, _, err = run(capsys, "--cap", "100", "analyze", "builtin:S5")
    assert code == 1 and "cap" in err.lower()
    monkeypatch.setenv("HUGHESLAB_CAP", "100")
    code, _, _ = run(capsys, "analyze", "builtin:S5")
    assert code == 1


def test_output_is_deterministic(capsys):
    first = run(capsys, "analyze", "builtin:AGL1_9")[1]
    second = run(capsys, "analyze", "builtin:AGL1_9")[1]
    assert first == second


def test_no_subcommand(capsys):
    assert run(capsys)[0] == 2


def test_cap_flag_does_not_leak(capsys, monkeypatch):
    import os

    monkeypatch.delenv("HUGHESLAB_CAP", raising=False)
    run(capsys, "--cap", "100", "analyze", "builtin:C6")
    assert "HUGHESLAB_CAP" not in os.environ


def test_exceptional_exits_with_3(tmp_path, capsys, monkeypatch):
    import hugheslab.cli as cli

    real = cli.analyze

    def forced(G, pi, name=None):
        rep = real(G, pi, name=name)
        rep.case = "EXCEPTIONAL"
        return rep

    monkeypatch.setattr(cli, "analyze", forced)
    code, out, _ = run(capsys, "analyze", "builtin:AGL1_5")
    rep = json.loads(out)
    assert code == 3 and rep["case"] == "EXCEPTIONAL"
    assert rep["frobenius"]["kernel_order"] == 5
    cat = tmp_path / "c.jsonl"
    cat.write_text('{"name": "C3", "degree": 3, "generators": [[1, 2, 0]]}\n')
    code, _, _ = run(capsys, "scan", str(cat))
    assert code == 3
