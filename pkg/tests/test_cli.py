import json
import subprocess
import sys

import pytest

from beit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_wheel_formula(capsys):
    code, out, _ = run(capsys, "invariants", "--family", "wheel:5", "--formula", "--json")
    assert code == 0
    f = json.loads(out)["formula"]
    assert (f["reg"], f["pd"], f["depth"]) == (3, 7, 5)


def test_file_oracle(capsys, tmp_path):
    p = tmp_path / "g.json"
    p.write_text('{"n": 3, "edges": [[1, 2], [2, 3]]}')
    code, out, _ = run(capsys, "invariants", "--file", str(p), "--oracle", "--json")
    o = json.loads(out)["oracle"]
    assert code == 0 and o["depth"] == 4
    assert o["extremal"] == [[2, 2, 1]]  # beta_{2,4} = 1
    code, out, _ = run(capsys, "invariants", "--file", str(p), "--oracle")
    assert "beta_{2,4}=1" in out


def test_grb_predict(capsys):
    code, out, _ = run(capsys, "invariants", "--family", "grb:3,2", "--predict", "--json")
    pr = json.loads(out)["predict"]
    assert code == 0
    assert (pr["n"], pr["pd"], pr["depth"], len(pr["extremal"])) == (7, 10, 4, 2)


def test_predict_needs_grb(capsys):
    code, _, err = run(capsys, "invariants", "--family", "path:3", "--predict")
    assert code == 2 and "grb" in err


def test_formula_cone_fallback(capsys):
    # W_4: no closed wheel table, cone formula over C_4 instead
    code, out, _ = run(capsys, "invariants", "--family", "wheel:4", "--formula", "--json")
    f = json.loads(out)["formula"]
    assert code == 0 and f["source"].startswith("cone formula") and f["pd"] == 6


def test_parse_errors(capsys):
    assert run(capsys, "invariants", "--family", "bogus:3")[0] == 2
    assert run(capsys, "invariants", "--family", "cycle:2")[0] == 2
    assert run(capsys, "invariants", "--file", "/nonexistent.json")[0] == 2
    assert run(capsys, "invariants", "--family", "path:3", "--prime", "100")[0] == 2
    with pytest.raises(SystemExit) as e:
        main(["invariants"])
    assert e.value.code == 2


def test_cap_exit(capsys):
    code, _, err = run(capsys, "invariants", "--family", "cycle:6", "--oracle")
    assert code == 3 and "n <= 5" in err
    code, out, _ = run(capsys, "invariants", "--family", "cycle:6", "--oracle", "--extended", "--json")
    assert code == 0 and json.loads(out)["oracle"]["pd"] == 6


def test_export_formats(capsys, tmp_path):
    code, out, _ = run(capsys, "export", "--family", "complete:2", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["entries"] == [{"beta": 1, "d": 0, "i": 0}, {"beta": 1, "d": 2, "i": 1}]
    code, out, _ = run(capsys, "export", "--family", "path:3", "--format", "diagram-text")
    rows = [ln.split("|")[1].split() for ln in out.splitlines()[2:5]]
    assert rows == [["1", ".", "."], [".", "2", "."], [".", ".", "1"]]
    code, out, _ = run(capsys, "export", "--family", "path:3", "--format", "csv")
    assert out.splitlines()[0] == "i,d,j,beta"
    target = tmp_path / "t.json"
    assert run(capsys, "export", "--family", "path:3", "--output", str(target))[0] == 0
    assert json.loads(target.read_text())["n"] == 3
    assert run(capsys, "export", "--family", "path:3", "--format", "xml")[0] == 2


def test_determinism(capsys):
    a = run(capsys, "export", "--family", "cycle:5", "--format", "json")[1]
    b = run(capsys, "export", "--family", "cycle:5", "--format", "json")[1]
    assert a == b
    a = run(capsys, "verify", "cone-betti", "--json")[1]
    b = run(capsys, "verify", "cone-betti", "--json")[1]
    assert a == b


def test_prime_option(capsys):
    a = json.loads(run(capsys, "export", "--family", "cycle:4", "--prime", "101")[1])
    b = json.loads(run(capsys, "export", "--family", "cycle:4")[1])
    assert a["p"] == 101 and a["entries"] == b["entries"]


def test_env_prime(capsys, monkeypatch):
    monkeypatch.setenv("BEIT_PRIME", "101")
    assert json.loads(run(capsys, "export", "--family", "path:3")[1])["p"] == 101


@pytest.mark.parametrize("suite", ["linear-strand", "pd-lower", "cone-betti", "euler"])
def test_verify_suites(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "--json")
    d = json.loads(out)[suite]
    assert code == 0 and d["pass"]
    if suite in ("linear-strand", "pd-lower", "euler"):
        assert d["instances"] == 30  # connected graphs on 2..5 vertices


def test_verify_failure_exit(capsys, monkeypatch):
    from beit import verify

    def broken(cfg):
        rep = verify.VerifyReport("x")
        rep.check("always-wrong", 1, 2)
        return [rep]

    monkeypatch.setitem(verify.SUITES, "wheel", broken)
    code, out, _ = run(capsys, "verify", "wheel")
    assert code == 1 and "FAIL wheel" in out


def test_console_entry():
    r = subprocess.run([sys.executable, "-m", "beit.cli", "export", "--family", "complete:2"],
                       capture_output=True, text=True, check=True)
    assert json.loads(r.stdout)["n"] == 2
