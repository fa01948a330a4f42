import json

import pytest

from nildga.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    cap = capsys.readouterr()
    return code, cap.out, cap.err


def test_tables(capsys, tmp_path):
    out_json = tmp_path / "t.json"
    code, out, _ = run(capsys, "tables", "--kodaira", "1", "--brackets", "--json", str(out_json))
    assert code == 0
    assert "p=1: 1 2 1" in out
    assert "[or, T^W] = i/2·ow^W  (exact)" in out
    doc = json.loads(out_json.read_text())
    assert doc["result"]["grid"] == [[1, 2, 1]] * 3
    assert doc["exit_code"] == 0


def test_tables_degree_two(capsys):
    code, out, _ = run(capsys, "tables", "--kodaira", "2", "--degree", "2")
    assert code == 0
    assert "span the harmonic spaces: PASS" in out


def test_json_is_reproducible(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    run(capsys, "frobenius", "-D", "4", "--json", str(a))
    run(capsys, "frobenius", "-D", "4", "--json", str(b))
    assert a.read_bytes() == b.read_bytes()


def test_verify_symplectic(capsys):
    code, out, _ = run(capsys, "verify", "--symplectic", "2,1,1,0")
    assert code == 0
    assert "bijective    PASS" in out


def test_verify_complex(capsys):
    code, out, _ = run(capsys, "verify", "--kodaira", "1", "--abelian-h")
    assert code == 0
    assert "exact: PASS" in out


def test_kuranishi(capsys):
    code, out, _ = run(capsys, "kuranishi", "--kodaira", "1", "-D", "6", "--components")
    assert code == 0
    assert "T: -t4*s0/(1-t2)" in out
    assert "or^T: -s0*s3/(1-t2)" in out


def test_kuranishi_symbolic(capsys):
    code, out, _ = run(capsys, "kuranishi", "--mode", "symbolic", "--components")
    assert code == 0
    assert "vanishes on K1: PASS" in out


def test_spec_file(capsys, tmp_path):
    p = tmp_path / "spec.json"
    p.write_text(json.dumps({"nilpotent_complex": {"n": 1, "E": [[["0", "-1/2"]]]}}))
    code, out, _ = run(capsys, "tables", "--spec", str(p))
    assert code == 0
    assert "p=0: 1 2 1" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["verify", "--symplectic", "1,1,1,1"],
        ["verify", "--symplectic", "1,2"],
        ["verify", "--kodaira", "1", "--mirror"],
        ["kuranishi", "--kodaira", "1", "-D", "1"],
        ["frobenius", "--kodaira", "2"],
        ["tables", "--kodaira", "0"],
        ["tables", "--spec", "/nonexistent/spec.json"],
    ],
)
def test_bad_input_exit_code(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_malformed_spec(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"symplectic": {"u1": "x", "v1": 0, "u2": 0, "v2": 0}}))
    assert run(capsys, "verify", "--spec", str(p))[0] == 2
    p.write_text(json.dumps({"kodaira": {"n": 1}, "symplectic": {}}))
    assert run(capsys, "verify", "--spec", str(p))[0] == 2


def test_usage_error(capsys):
    assert main(["nope"]) == 2
