import json
import subprocess
import sys

import pytest

from realgrid.cli import run


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_poly_example(capsys):
    assert call(capsys, "poly", "corpus:8_20a") == (0, "-t^-2 + 3 - t^2\n", "")


def test_minus_example(capsys):
    code, out, _ = call(capsys, "compute", "corpus:unknot3", "--flavor", "minus")
    assert code == 0 and out == "U^inf_(0,0)\n"


def test_verify_example(capsys):
    code, out, _ = call(capsys, "verify", "corpus:trefoil5")
    assert code == 0
    assert out.rstrip().endswith("OK")
    code, out, _ = call(capsys, "verify", "corpus:trefoil5", "--json")
    obj = json.loads(out)
    assert obj["ok"] and any(c["actual"] == "generators=26 domains=61" for c in obj["checks"])


def test_hat_text_uses_table_order(capsys):
    # hat of the mirror trefoil is (m, a2) = (0,-1), (0,0), (1,1); printed as (a2, m)
    assert call(capsys, "compute", "corpus:trefoil5")[1] == "(-1,0) + (0,0) + (1,1)\n"


def test_minus_tower_first(capsys):
    out = call(capsys, "compute", "corpus:6_1", "--flavor", "minus")[1]
    assert out == "U^inf_(-1,-1) + U^1_(1,0) + U^2_(1,0)\n"


def test_json_roundtrip(capsys):
    code, out, _ = call(capsys, "compute", "corpus:fig8", "--flavor", "minus", "--json")
    obj = json.loads(out)
    assert obj["flavor"] == "minus"
    assert obj["module"]["towers"] == [{"m": -1, "a2": -1}]
    code, out, _ = call(capsys, "invariants", "corpus:6_1", "--json")
    obj = json.loads(out)
    assert obj["tau"] == 1 and obj["ord_u"] == 2 and obj["alexander"] == "-2*t^-1 + 1 + 2*t"


def test_tilde_flavor(capsys):
    code, out, _ = call(capsys, "compute", "corpus:unknot3", "--flavor", "tilde")
    assert code == 0 and out == "(-2,-1) + (0,0)\n"


def test_periodic_tilde(capsys, tmp_path):
    f = tmp_path / "p.rgd"
    f.write_text("n=3\nO=0 2 1\nX=1 0 2\n")
    code, out, _ = call(capsys, "compute", str(f), "--flavor", "tilde")
    assert code == 0 and out == "(0,1)^2  (relative Maslov grading)\n"
    assert call(capsys, "compute", str(f), "--flavor", "hat")[1] == "(0,1)  (relative Maslov grading)\n"
    assert json.loads(call(capsys, "compute", str(f), "--json")[1])["relative"] is True
    assert call(capsys, "compute", str(f), "--flavor", "minus")[0] == 2
    assert call(capsys, "poly", str(f))[0] == 2


def test_invalid_input_exit_2(capsys, tmp_path):
    assert call(capsys, "poly", "corpus:nope")[0] == 2
    assert call(capsys, "poly", str(tmp_path / "missing.rgd"))[0] == 2
    bad = tmp_path / "bad.rgd"
    bad.write_text("n=4\nO=1 0 2 3\nX=3 2 0 1\n")
    code, _, err = call(capsys, "compute", str(bad))
    assert code == 2 and "R-symmetric" in err
    assert call(capsys, "bogus")[0] == 2


def test_capacity_exit_4(capsys):
    code, _, err = call(capsys, "compute", "corpus:sum_3_1_5_1", "--flavor", "minus", "--max-size", "9")
    assert code == 4 and "limit" in err


def test_threads_env(capsys, monkeypatch):
    ref = call(capsys, "compute", "corpus:fig8")
    monkeypatch.setenv("RGH_THREADS", "4")
    assert call(capsys, "compute", "corpus:fig8") == ref
    monkeypatch.setenv("RGH_THREADS", "zero")
    assert call(capsys, "compute", "corpus:fig8")[0] == 2


def test_corpus_list_and_get(capsys, tmp_path):
    out = call(capsys, "corpus", "list")[1]
    assert "trefoil5\tn=5\t3_1" in out
    code, text, _ = call(capsys, "corpus", "get", "fig8")
    f = tmp_path / "fig8.rgd"
    f.write_text(text)
    assert call(capsys, "poly", str(f))[1] == "-t^-1 + 1 + t\n"


def test_table_formats(capsys, tmp_path):
    for name in ("unknot3", "trefoil5"):
        (tmp_path / f"{name}.rgd").write_text(call(capsys, "corpus", "get", name)[1])
    code, out, _ = call(capsys, "table", str(tmp_path))
    assert code == 0 and out.splitlines()[0].startswith("trefoil5\t(-1,0) + (0,0) + (1,1)\tU^inf_(1,1)")
    out = call(capsys, "table", str(tmp_path), "--latex")[1]
    assert r"U^{\infty}_{(1,1)} \oplus U^{1}_{(0,0)}" in out
    rows = json.loads(call(capsys, "table", str(tmp_path), "--json")[1])
    assert [r["name"] for r in rows] == ["trefoil5", "unknot3"]


def test_consistency_failure_exit_3(capsys, monkeypatch):
    import realgrid.cli as cli
    from realgrid.homology import DivisionError

    def boom(*a, **k):
        raise DivisionError("forced")
    monkeypatch.setattr(cli, "knot_invariants", boom)
    assert call(capsys, "compute", "corpus:fig8")[0] == 3


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "realgrid", "poly", "corpus:trefoil5"],
                         capture_output=True, text=True, check=True).stdout
    assert out == "t^-1 + 1 - t\n"
