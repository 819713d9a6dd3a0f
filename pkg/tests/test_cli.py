import json
import subprocess
import sys

import pytest

from gdc.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_check_filter(capsys):
    code, out = run(capsys, "check", "--model", "frel", "--only", "D-CHAIN")
    assert code == 0
    assert "frel: 48 checks, 48 passed, 0 failed" in out
    assert all(line.startswith(("equation", "D-CHAIN", "frel:")) for line in out.splitlines())


def test_check_records_are_stable(capsys, tmp_path):
    argv = ["check", "--model", "sympoly", "--max-degree", "2", "--vars", "1",
            "--only", "E2-,D-", "--format", "records"]
    code, first = run(capsys, *argv)
    _, second = run(capsys, *argv)
    assert code == 0 and first == second
    rows = [json.loads(line) for line in first.splitlines()]
    assert set(rows[0]) == {"equation", "grades", "sizes", "status"}
    target = tmp_path / "report.jsonl"
    assert main(argv + ["--out", str(target)]) == 0
    assert target.read_text() == first


def test_check_timing_is_opt_in(capsys):
    _, out = run(capsys, "check", "--only", "E2-COMONAD-COUNIT-L", "--max-grade", "0",
                 "--format", "records", "--timing")
    assert "seconds" in json.loads(out.splitlines()[0])


def test_check_exit_status_reports_failures(capsys):
    code, out = run(capsys, "check", "--only", "E13-CBAR-PROM", "--max-grade", "2",
                    "--max-set", "2")
    assert code == 1
    assert "FAIL E13-CBAR-PROM grades=[2, 1, 1] sizes=[2]" in out
    assert "at: ([a,a],[b,b])" in out


def test_check_unknown_filter(capsys):
    assert main(["check", "--only", "NOPE"]) == 2
    assert "no equation matches" in capsys.readouterr().err


def test_unknown_model_is_rejected():
    with pytest.raises(SystemExit):
        main(["check", "--model", "vectors"])


def test_eval_seely_roundtrip(capsys):
    code, out = run(capsys, "eval", "seely", "--compare", "seely-l", "seely-r", "--roundtrip",
                    "--quiet")
    assert code == 0
    assert out.splitlines()[-1] == "inverse: yes"
    assert "seely-l [r=2]: !2 (A ⊕ B) ⊢ !0 A ⊗ !2 B ⊕ !1 A ⊗ !1 B ⊕ !2 A ⊗ !0 B" in out


def test_eval_env_and_relations(capsys):
    code, out = run(capsys, "eval", "rules", "--proof", "der-a", "--env", "A=2")
    assert code == 0
    assert out.splitlines() == ["der-a: !1 A ⊢ A", "  {([a], a), ([b], b)}"]
    code, out = run(capsys, "eval", "rules", "--proof", "der-a", "--env", "A=1")
    assert out.splitlines()[1] == "  {([a], a)}"


def test_eval_compare(capsys):
    code, out = run(capsys, "eval", "rules", "--compare", "p11-der-cut", "p11-der-direct",
                    "--proof", "p11-der-cut", "--proof", "p11-der-direct", "--quiet")
    assert code == 0 and out.splitlines()[-1] == "equal: yes"


def test_eval_reports_typing_errors_with_location(capsys, tmp_path):
    bad = tmp_path / "bad.gdl"
    bad.write_text("(proof ok (ax A))\n(proof bad\n  (contr 1 2 (tensor-r (ax (bang 1 A)) (ax (bang 1 A)))))\n")
    code, out = run(capsys, "eval", str(bad))
    assert code == 2
    assert "ok: A ⊢ A" in out
    assert f"{bad}:3:3: contr: expected !1 A, !2 A" in out


def test_eval_reports_parse_errors(capsys, tmp_path):
    bad = tmp_path / "bad.gdl"
    bad.write_text("(proof p (der (ax A))\n")
    code, out = run(capsys, "eval", str(bad))
    assert code == 2 and "1:1: unclosed '('" in out


def test_diff(capsys):
    code, out = run(capsys, "diff", "x^2*y", "--vars", "x,y")
    assert code == 0
    assert out.splitlines() == ["2·(x*y ⊗ x) + (x^2 ⊗ y)", "Euler: 3*x^2*y = 3·(x^2*y): yes"]
    code, out = run(capsys, "diff", "x", "--vars", "x")
    assert out.splitlines()[0] == "(1 ⊗ x)"
    code, out = run(capsys, "diff", "x+y^2")
    assert code == 2 and "not homogeneous" in out


def test_seely_tables(capsys):
    code, out = run(capsys, "seely", "--sizes", "1", "1", "--grade", "2")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 4
    assert lines[1] == "[0:a,1:b]  ↔  [1,1] ([a],[b])"
    assert lines[-1] == "3 ↔ 1·1 + 1·1 + 1·1 = 3; bijection: yes"
    _, out = run(capsys, "seely", "--sizes", "2", "1", "--grade", "2")
    assert out.splitlines()[-1] == "6 ↔ 1·1 + 2·1 + 3·1 = 6; bijection: yes"
    _, out = run(capsys, "seely", "--grade", "0")
    assert out.splitlines() == ["[]  ↔  [0,0] ([],[])", "1 ↔ 1·1 = 1; bijection: yes"]


def test_catalog_listing(capsys):
    code, out = run(capsys, "catalog")
    first = out.splitlines()[0].split("\t")
    assert code == 0 and first == ["E2-COMONAD-COUNIT-L", "graded comonad: left counit",
                                   "p_{1,r};d = 1"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gdc", "diff", "x*y", "--vars", "x,y"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("(y ⊗ x) + (x ⊗ y)")
