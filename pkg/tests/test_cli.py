import json

import pytest

from marcum.cli import TABLE_61, TABLE_MU, TABLE_Y, main, run_selftest, selftest_threshold


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def fields(line):
    return dict(kv.split("=", 1) for kv in line.split())


def test_eval_plain(capsys):
    code, out, _ = run(capsys, "eval", "--mu", "2", "--x", "5", "--y", "0")
    assert code == 0
    f = fields(out.strip())
    assert float(f["q"]) == 1.0 and float(f["p"]) == 0.0
    assert f["method"] == "series" and f["status"] == "ok"


def test_eval_tilde(capsys):
    code, out, _ = run(capsys, "eval", "--mu", "1", "--x", "40", "--y", "20", "--notation", "tilde")
    assert code == 0
    assert f"{float(fields(out)['p']):.5e}" == "1.94499e-89"


def test_eval_table_row(capsys):
    code, out, _ = run(capsys, "eval", "--mu", "8192", "--x", "573.44", "--y", "8601.6")
    assert code == 0
    p = float(fields(out)["p"])
    assert abs(p - 0.04434265824612003) / 0.04434265824612003 < 5e-11


def test_eval_json(capsys):
    code, out, _ = run(capsys, "eval", "--mu", "5", "--x", "10", "--y", "25", "--format", "json")
    rec = json.loads(out)
    assert code == 0
    assert set(rec) == {"mu", "x", "y", "notation", "p", "q", "method", "status"}
    assert rec["p"] + rec["q"] == 1.0 and rec["method"] == "series"


def test_eval_invalid_and_degraded(capsys):
    code, out, _ = run(capsys, "eval", "--mu", "0.5", "--x", "1", "--y", "1", "--format", "json")
    assert code == 2 and json.loads(out)["p"] is None
    code, out, _ = run(capsys, "eval", "--mu", "20000", "--x", "100", "--y", "20000")
    assert code == 4 and fields(out)["status"] == "degraded_accuracy"


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["eval", "--mu", "abc", "--x", "1", "--y", "1"])
    assert exc.value.code == 64
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 64
    capsys.readouterr()


def test_plain_output_round_trips(capsys):
    _, out, _ = run(capsys, "eval", "--mu", "3.5", "--x", "7.25", "--y", "9")
    from marcum import marcum

    r = marcum(3.5, 7.25, 9)
    assert float(fields(out)["p"]) == r.p and float(fields(out)["q"]) == r.q


# -- batch ---------------------------------------------------------------------


def test_batch_empty(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text("")
    code, out, _ = run(capsys, "batch", str(src))
    assert code == 0 and out == ""


def test_batch_table(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text("".join(f"{TABLE_MU} {r * TABLE_MU!r} {TABLE_Y}\n" for r, _, _ in TABLE_61))
    dst = tmp_path / "out.txt"
    code, _, _ = run(capsys, "batch", str(src), str(dst))
    lines = dst.read_text().splitlines()
    assert code == 0 and len(lines) == 10
    for line, (_, q_ref, _) in zip(lines, TABLE_61):
        q = float(line.split()[4])
        assert abs(q - q_ref) / q_ref <= 5e-11


def test_batch_malformed_and_comments(tmp_path, capsys):
    src = tmp_path / "in.txt"
    src.write_text("# header\n5 10 25\n5 ten 25\n2 5 30\n\n")
    code, out, _ = run(capsys, "batch", str(src))
    lines = out.splitlines()
    assert code == 0 and len(lines) == 5
    assert lines[0] == "# header" and lines[4] == ""
    assert lines[2].split()[-1] == "invalid_input"
    assert [ln.split()[-1] for ln in (lines[1], lines[3])] == ["ok", "ok"]


def test_batch_stdin(monkeypatch, capsys):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("1 40 20\n"))
    code, out, _ = run(capsys, "batch", "-", "--notation", "tilde")
    assert code == 0 and f"{float(out.split()[3]):.5e}" == "1.94499e-89"


def test_batch_io_errors(tmp_path, capsys):
    code, _, err = run(capsys, "batch", str(tmp_path / "missing.txt"))
    assert code == 74 and "cannot read" in err
    src = tmp_path / "in.txt"
    src.write_text("5 10 25\n")
    code, _, _ = run(capsys, "batch", str(src), str(tmp_path / "no" / "dir" / "out.txt"))
    assert code == 74


def test_batch_deterministic_and_matches_eval(tmp_path, capsys):
    pts = [(5.0, 10.0, 25.0), (40.0, 100.0, 140.0), (200.0, 300.0, 520.0), (1.0, 800.0, 200.0)]
    src = tmp_path / "in.txt"
    src.write_text("".join(f"{m} {x} {y}\n" for m, x, y in pts))
    _, first, _ = run(capsys, "batch", str(src))
    _, second, _ = run(capsys, "batch", str(src))
    assert first == second
    for line, (m, x, y) in zip(first.splitlines(), pts):
        _, out, _ = run(capsys, "eval", "--mu", str(m), "--x", str(x), "--y", str(y))
        f = fields(out)
        assert line.split()[3:] == [f["p"], f["q"], f["method"], f["status"]]


# -- selftest and table ------------------------------------------------------------


def test_selftest_deterministic(capsys):
    a = run(capsys, "selftest", "--A", "200", "--N", "100", "--seed", "7", "--format", "json")
    b = run(capsys, "selftest", "--A", "200", "--N", "100", "--seed", "7", "--format", "json")
    assert a[0] == 0 and a[1] == b[1]
    rep = json.loads(a[1])
    assert rep["max_residual"] >= rep["mean_residual"] >= 0
    assert sum(sum(h.values()) for h in rep["histogram"].values()) == rep["N"] - rep["clamped_count"]


def test_selftest_plain(capsys):
    code, out, _ = run(capsys, "selftest", "--A", "50", "--N", "100")
    assert code == 0 and out.strip().endswith("PASS")


def test_selftest_usage(capsys):
    assert run(capsys, "selftest", "--A", "5", "--N", "100")[0] == 64
    assert run(capsys, "selftest", "--A", "2e4", "--N", "100")[0] == 64
    assert run(capsys, "selftest", "--A", "200", "--N", "10")[0] == 64


def test_selftest_thresholds():
    assert [selftest_threshold(a) for a in (200, 1000, 1e4)] == [5e-12, 2e-11, 1e-10]
    rep = run_selftest(100.0, 200, 3)
    assert rep["passed"] and rep["evaluated"] + rep["clamped_count"] == 200


def test_table61(capsys):
    code, out, _ = run(capsys, "table61")
    assert code == 0 and out.strip().endswith("PASS")
    assert "0.99962497238364" in out and "0.004138241872" in out
