import json
import subprocess
import sys

import pytest

from nakalab.cli import main
from nakalab.generate import fixture_path


def fx(name):
    return str(fixture_path(name))


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_classify_ex24(capsys):
    code, out, _ = run(capsys, "classify", fx("ex2_4.quiver"))
    assert code == 0
    assert out.splitlines()[0] == "right 2-Nakayama, left 3-Nakayama"


def test_classify_a1(capsys):
    code, out, _ = run(capsys, "classify", fx("a1.quiver"))
    assert code == 0 and out.startswith("Nakayama (index 1)")


def test_classify_kronecker(capsys):
    code, out, err = run(capsys, "classify", fx("kronecker.quiver"))
    assert code == 2
    assert "band: a b^-" in out and "representation-infinite" in err


def test_classify_table(capsys):
    code, out, _ = run(capsys, "classify", fx("d4.quiver"), "--table")
    assert code == 0
    assert "factor-index multiset: 1x9, 2x2, 5x1" in out
    assert "opposite algebra:" in out


def test_classify_json(capsys):
    code, out, _ = run(capsys, "classify", fx("lambda2.quiver"), "--json")
    d = json.loads(out)
    assert code == 0 and d["rightIndex"] == 3 and d["leftIndex"] == 3


def test_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.quiver"
    bad.write_text("vertex 1 2\narrow a 1 9\n")
    code, _, err = run(capsys, "classify", str(bad))
    assert code == 1 and "bad.quiver:2:" in err


def test_missing_file(capsys):
    code, _, err = run(capsys, "classify", "/nonexistent.quiver")
    assert code == 1 and "error" in err


def test_unsupported_exit(tmp_path, capsys):
    f = tmp_path / "wild.quiver"
    f.write_text("vertex 1 2 3 4 5\narrow a 1 2\narrow b 2 3\narrow c 2 4\narrow d 2 5\nrel a b\n")
    code, _, _ = run(capsys, "classify", str(f))
    assert code == 3


def test_module_d4(capsys):
    code, out, _ = run(capsys, "module", fx("d4_121.module"))
    assert code == 0 and "factorIndex: 5" in out


def test_module_simple(capsys):
    code, out, _ = run(capsys, "module", fx("simple3.module"), "--json")
    d = json.loads(out)
    assert code == 0 and d["factorIndex"] == 1 and d["cofactorIndex"] == 1


def test_module_lambda2_p4(capsys):
    code, out, _ = run(capsys, "module", fx("lambda2.quiver"), fx("lambda2_p4.module"), "--json")
    d = json.loads(out)
    assert code == 0 and d["factorIndex"] == 2 and d["cofactorIndex"] == 3


def test_module_relation_violation(tmp_path, capsys):
    f = tmp_path / "bad.module"
    f.write_text("dim 4 1\ndim 3 1\ndim 1 1\nmap b1 [[1]]\nmap b2 [[1]]\n")
    code, _, err = run(capsys, "module", fx("lambda2.quiver"), str(f))
    assert code == 1 and "relation" in err


def test_strings(capsys):
    code, out, _ = run(capsys, "strings", fx("ex2_4.quiver"))
    assert code == 0 and out.splitlines()[-1] == "6 strings"


def test_ar_dot(tmp_path, capsys):
    dot = tmp_path / "ar.dot"
    code, out, _ = run(capsys, "ar", fx("ex2_4.quiver"), "--dot", str(dot), "--verify")
    assert code == 0
    assert "nodes: 6" in out and "edges: 6" in out
    assert dot.read_text().startswith("digraph")


def test_ar_a1(capsys):
    code, out, _ = run(capsys, "ar", fx("a1.quiver"))
    assert code == 0 and "nodes: 1" in out and "edges: 0" in out


def test_ar_rejects(capsys):
    code, _, err = run(capsys, "ar", fx("d4.quiver"))
    assert code == 3 and "condition (ii)" in err


def test_check2(capsys):
    code, out, _ = run(capsys, "check2", fx("ex2_4.quiver"))
    assert code == 0 and out.splitlines()[-1] == "right 2-Nakayama"
    code, out, _ = run(capsys, "check2", fx("d4.quiver"), "--json")
    d = json.loads(out)
    assert code == 3 and d["firstFailure"] == "ii" and d["conditions"]["iv"] is False


def test_oracle_cli(capsys):
    code, out, _ = run(capsys, "oracle", fx("lambda2.quiver"))
    assert code == 0 and out.startswith("10 modules checked") and "FAIL" not in out


def test_oracle_budget(capsys):
    code, _, err = run(capsys, "oracle", fx("d4.quiver"), "--budget", "8")
    assert code == 4 and "budget" in err


def test_bad_budget():
    with pytest.raises(SystemExit):
        main(["oracle", fx("a1.quiver"), "--budget", "0"])


def test_hereditary_type(capsys):
    code, out, _ = run(capsys, "hereditary", "--type", "D5", "--all", "--json")
    rows = json.loads(out)
    assert code == 0 and len(rows) == 16
    assert all(r["enumerated"]["right"] == 7 for r in rows)


def test_hereditary_file(capsys):
    code, out, _ = run(capsys, "hereditary", fx("d4.quiver"))
    assert code == 0 and "predicted right 5 left 5" in out


def test_hereditary_needs_input(capsys):
    code, _, _ = run(capsys, "hereditary")
    assert code == 1


def test_non_prime_field(capsys):
    code, _, _ = run(capsys, "classify", fx("ex2_4.quiver"), "--field", "4")
    assert code == 1


@pytest.mark.parametrize("argv", [["classify", "ex2_4.quiver", "--json"], ["ar", "ex2_4.quiver", "--json"],
                                  ["classify", "d4.quiver", "--table"]])
def test_deterministic(capsys, argv):
    argv = [argv[0], fx(argv[1]), *argv[2:]]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "nakalab.cli", "classify", fx("ex2_4.quiver")],
                         capture_output=True, text=True)
    assert out.returncode == 0 and "left 3-Nakayama" in out.stdout
