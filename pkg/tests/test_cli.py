import subprocess
import sys
from pathlib import Path

import pytest

from pspread.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run(argv, capsys):
    code = main([str(a) for a in argv])
    out = capsys.readouterr()
    return code, out.out, out.err


def golden(name):
    return (GOLDEN / name).read_text()


def test_construct_example(tmp_path, capsys):
    out = tmp_path / "c.psc"
    code, _, _ = run(["construct", "--q", 2, "--k", 2, "--n", 7, "--p", 1, 1, 1, "--pp", 1, 1, 0, 1, "--out", out], capsys)
    assert code == 0
    assert out.read_text() == golden("example.psc")


def test_construct_spread_auto(capsys):
    code, out, _ = run(["construct", "--q", 2, "--k", 2, "--n", 4], capsys)
    assert code == 0
    assert out == "PSC v1\nq 2\nk 2\nn 4\np 1 1 1\npp 1 1 1\n"


@pytest.mark.parametrize("argv", [
    ["construct", "--q", 2, "--k", 3, "--n", 5],
    ["construct", "--q", 2, "--k", 2, "--n", 7, "--p", 1, 0, 1],
    ["construct", "--q", 6, "--k", 2, "--n", 4],
])
def test_construct_domain_errors(argv, capsys):
    code, _, err = run(argv, capsys)
    assert code == 1 and err.startswith("error:")


def test_construct_non_monic(capsys):
    assert run(["construct", "--q", 2, "--k", 2, "--n", 7, "--p", 1, 1, 0], capsys)[0] == 2


def test_info(capsys):
    code, out, _ = run(["info", GOLDEN / "example.psc"], capsys)
    assert code == 0
    assert out == golden("example_info.txt")
    lines = dict(line.split() for line in out.splitlines())
    assert (lines["cardinality"], lines["singleton"], lines["upper"], lines["lower"]) == ("41", "63", "42", "41")


def test_info_spread(tmp_path, capsys):
    path = tmp_path / "s.psc"
    run(["construct", "--q", 2, "--k", 2, "--n", 4, "--out", path], capsys)
    assert "cardinality 5\n" in run(["info", path], capsys)[1]


def test_info_io_errors(tmp_path, capsys):
    bad = tmp_path / "bad.psc"
    bad.write_text("PSC v1\nq 2\n")
    assert run(["info", bad], capsys)[0] == 2
    assert run(["info", tmp_path / "missing.psc"], capsys)[0] == 2


def test_encode(tmp_path, capsys):
    out = tmp_path / "w.mat"
    assert run(["encode", GOLDEN / "example.psc", "--index", 17, "--out", out], capsys)[0] == 0
    assert out.read_text() == golden("codeword17.mat")
    code, text, _ = run(["encode", GOLDEN / "example.psc", "--index", 0], capsys)
    assert text.endswith("0 0 0 0 0 1 0\n0 0 0 0 0 0 1\n")
    assert run(["encode", GOLDEN / "example.psc", "--index", 41], capsys)[0] == 1


def test_corrupt_golden(tmp_path, capsys):
    out = tmp_path / "r.mat"
    argv = ["corrupt", GOLDEN / "codeword17.mat", "--erase", 1, "--seed", 5, "--out", out]
    assert run(argv, capsys)[0] == 0
    assert out.read_text() == golden("received17.mat")
    argv = ["corrupt", GOLDEN / "codeword17.mat", "--erase", 2, "--error", 1, "--seed", 5, "--out", out]
    assert run(argv, capsys)[0] == 0
    assert out.read_text() == golden("received17_trunc.mat")


def test_corrupt_bad_dims(capsys):
    assert run(["corrupt", GOLDEN / "codeword17.mat", "--erase", 3], capsys)[0] == 1
    assert run(["corrupt", GOLDEN / "codeword17.mat", "--erase", 2, "--error", 6], capsys)[0] == 1
    assert run(["corrupt", GOLDEN / "example.psc", "--erase", 1], capsys)[0] == 2


def test_decode_golden(capsys):
    code, out, _ = run(["decode", GOLDEN / "example.psc", GOLDEN / "received17.mat"], capsys)
    assert code == 0 and out == golden("decode17.txt")
    code, out, _ = run(["decode", GOLDEN / "example.psc", GOLDEN / "received17_trunc.mat"], capsys)
    assert code == 1 and out == golden("decode17_trunc.txt")
    code, out, _ = run(["decode", GOLDEN / "example.psc", GOLDEN / "received17.mat", "--oracle"], capsys)
    assert code == 0 and "index 17\n" in out


def test_decode_errors(tmp_path, capsys):
    wrong_q = tmp_path / "w.mat"
    wrong_q.write_text("MATFQ v1\nq 3\nrows 2\ncols 7\n" + "0 0 0 0 0 0 0\n" * 2)
    assert run(["decode", GOLDEN / "example.psc", wrong_q], capsys)[0] == 2
    zero = tmp_path / "z.mat"
    zero.write_text("MATFQ v1\nq 2\nrows 2\ncols 7\n" + "0 0 0 0 0 0 0\n" * 2)
    code, out, _ = run(["decode", GOLDEN / "example.psc", zero], capsys)
    assert code == 1 and out.startswith("status invalid_input")


def test_roundtrip_every_index(tmp_path, capsys):
    psc = tmp_path / "c.psc"
    run(["construct", "--q", 2, "--k", 2, "--n", 7, "--p", 1, 1, 1, "--pp", 1, 1, 0, 1, "--out", psc], capsys)
    word = tmp_path / "w.mat"
    recv = tmp_path / "r.mat"
    for i in range(41):
        run(["encode", psc, "--index", i, "--out", word], capsys)
        run(["corrupt", word, "--erase", 2, "--error", 0, "--out", recv], capsys)
        code, out, _ = run(["decode", psc, recv], capsys)
        assert code == 0 and f"index {i}\n" in out


def test_verify(capsys):
    code, out, _ = run(["verify", GOLDEN / "example.psc", "--min-distance"], capsys)
    assert code == 0 and out == golden("verify_min_distance.txt")
    code, out, _ = run(["verify", GOLDEN / "example.psc", "--enumerate", "--bounds", "--maximality"], capsys)
    assert code == 0
    assert out.splitlines() == ["codewords 41", "enumerate pass", "maximality pass", "bounds pass"]


def test_verify_failure(monkeypatch, capsys):
    monkeypatch.setattr("pspread.cli.is_maximal_exhaustive", lambda code: False)
    code, out, _ = run(["verify", GOLDEN / "example.psc", "--maximality"], capsys)
    assert code == 1 and "maximality FAIL" in out


def test_trials(capsys):
    code, out, _ = run(["trials", GOLDEN / "example.psc", "--erase", 2, "--error", 1, "--trials", 200,
                        "--policy", "truncate_to_k"], capsys)
    assert code == 0 and "guarantee false\n" in out
    code, out, _ = run(["trials", GOLDEN / "example.psc", "--erase", 2, "--trials", 200], capsys)
    assert code == 0 and "rate 1.0\n" in out and "guarantee true\n" in out
    code, out, _ = run(["trials", GOLDEN / "example.psc", "--erase", 1, "--error", 1, "--trials", 200], capsys)
    stats = dict(line.split() for line in out.splitlines())
    assert code == 0 and stats["guarantee"] == "false"
    assert int(stats["correct"]) > 0 and int(stats["undecodable"]) > 0


def test_trials_errors(capsys):
    assert run(["trials", GOLDEN / "example.psc", "--erase", 1, "--trials", 0], capsys)[0] == 1
    assert run(["trials", GOLDEN / "example.psc", "--erase", 2, "--error", 6], capsys)[0] == 1
    assert run(["trials", GOLDEN / "example.psc", "--erase", 3], capsys)[0] == 1
    assert run(["trials", GOLDEN / "missing.psc", "--erase", 1], capsys)[0] == 2


def test_trials_deterministic(capsys):
    argv = ["trials", GOLDEN / "example.psc", "--erase", 1, "--error", 1, "--trials", 100, "--seed", 4]
    assert run(argv, capsys)[1] == run(argv, capsys)[1]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "pspread", "info", str(GOLDEN / "example.psc")],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout == golden("example_info.txt")
