import json
import os
import subprocess
import sys

import pytest

from xmodkit import cli

FIX = os.path.join(os.path.dirname(__file__), "fixtures")


def fx(name):
    return os.path.join(FIX, name)


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    report = json.loads(out)
    assert report["exit_code"] == code
    return code, report


def test_check_good(capsys):
    code, rep = run(capsys, "check", fx("good_identity.json"))
    assert code == 0 and rep["crossed_module"] is True
    assert rep["report"]["mode"] == "exhaustive"


def test_check_bad_lists_violation(capsys):
    code, rep = run(capsys, "check", fx("bad_cm2.json"))
    assert code == 3 and rep["crossed_module"] is False
    assert rep["report"]["cm2_violations"] > 0
    assert any(e.get("axiom") == "CM2" for e in rep["report"]["examples"])


def test_induce_dihedral(capsys):
    code, rep = run(capsys, "induce", "--xmod", fx("c2.json"), "--into", fx("d6.json"),
                    "--iota", fx("iota_y.json"))
    assert code == 0
    assert rep["order"] == 12 and rep["route"] == "inj"
    assert rep["kernel_invariant_factors"] == [2] and rep["cokernel_order"] == 2
    assert rep["order_bound"] == 2 ** 6
    assert rep["axioms"]["ok"] is True
    assert sorted(rep["boundary"]) == [f"a{t}" for t in range(6)]


def test_induce_into_presented_group(capsys):
    code, rep = run(capsys, "induce", "--xmod", fx("c2.json"), "--into", fx("d6_presented.json"),
                    "--iota", "y")
    assert code == 0 and rep["order"] == 12


def test_induce_route_flag(capsys):
    code, rep = run(capsys, "induce", "--xmod", fx("c3_in_c9.json"), "--into", "cyclic:9",
                    "--iota", "t^3", "--route", "abelian")
    assert code == 0 and rep["route"] == "abelian" and rep["order"] == 27


def test_cone(capsys):
    code, rep = run(capsys, "cone", "--p", "cyclic:2", "--q", "dihedral:6", "--iota", "y")
    assert code == 0
    assert rep["pi1"] == {"order": 2, "abelian_invariants": [2]}
    assert rep["pi2"] == [2]


def test_h3class(capsys):
    code, rep = run(capsys, "h3class", "--xmod", fx("swap4.json"), "--coker-gen", "t")
    assert code == 0
    assert rep["h3_invariant_factors"] == [2] and rep["class_order"] == 2


def test_out_flag(tmp_path, capsys):
    target = tmp_path / "r.json"
    code = cli.main(["cone", "--p", "cyclic:2", "--q", "dihedral:4", "--iota", "y", "--out", str(target)])
    assert code == 0 and capsys.readouterr().out == ""
    assert json.loads(target.read_text())["pi2"] == [2]


@pytest.mark.parametrize("argv,code,error", [
    (["check", fx("not_json.json")], 2, "ParseError"),
    (["check", fx("missing_field.json")], 2, "ParseError"),
    (["check", fx("unknown_kind.json")], 2, "ParseError"),
    (["check", fx("bad_perm.json")], 2, "ParseError"),
    (["check", fx("no_such_file.json")], 2, "ParseError"),
    (["frobnicate"], 2, "ParseError"),
    (["induce", "--xmod", fx("c2.json"), "--into", "dihedral:6", "--iota", "q"], 2, "ParseError"),
    (["induce", "--xmod", fx("c2.json"), "--into", "dihedral:6", "--iota", "x"], 3, "PreconditionFailed"),
    (["check", fx("not_normal.json")], 3, "NotNormal"),
    (["check", fx("not_central.json")], 3, "KernelNotCentral"),
    (["h3class", "--xmod", fx("klein_trivial.json")], 3, "CokernelNotCyclic"),
    (["induce", "--xmod", fx("c2.json"), "--into", "dihedral:6", "--iota", "y", "--coset-limit", "5"],
     4, "CosetLimitExceeded"),
    (["induce", "--xmod", fx("c2.json"), "--into", "dihedral:6", "--iota", "y", "--route", "surj"],
     3, "PreconditionFailed"),
])
def test_error_paths(capsys, argv, code, error):
    got, rep = run(capsys, *argv)
    assert got == code and rep["error"] == error


def test_env_coset_limit(capsys, monkeypatch):
    monkeypatch.setenv("XMODKIT_COSET_LIMIT", "5")
    got, rep = run(capsys, "cone", "--p", "cyclic:2", "--q", "dihedral:6", "--iota", "y")
    assert got == 4 and rep["error"] == "CosetLimitExceeded"
    monkeypatch.setenv("XMODKIT_COSET_LIMIT", "many")
    got, rep = run(capsys, "cone", "--p", "cyclic:2", "--q", "dihedral:6", "--iota", "y")
    assert got == 2


def test_internal_error_path(capsys, monkeypatch):
    from xmodkit.errors import InternalAssertion

    def boom(*a, **k):
        raise InternalAssertion("forced")

    monkeypatch.setattr(cli, "cohomology_class", boom)
    got, rep = run(capsys, "h3class", "--xmod", fx("swap4.json"))
    assert got == 5 and rep["error"] == "InternalAssertion"

    def crash(*a, **k):
        raise RuntimeError("unexpected")

    monkeypatch.setattr(cli, "cohomology_class", crash)
    got, rep = run(capsys, "h3class", "--xmod", fx("swap4.json"))
    assert got == 5 and rep["error"] == "InternalError"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "xmodkit", "cone", "--p", "cyclic:2", "--q",
                           "dihedral:4", "--iota", "y"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["pi2"] == [2]
