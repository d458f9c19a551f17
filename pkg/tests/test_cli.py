"""CLI surface: compute, verify, atoms."""

import json

import pytest

from nsdelta.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def test_compute_catalan_c(capsys):
    code, out = run_cli(capsys, "compute", "catalan-c", "--alpha", "1")
    assert code == 0
    assert "m[1]" in out


def test_compute_grow_json(capsys):
    code, out = run_cli(
        capsys, "compute", "grow", "--path", "ENE", "--ell", "1", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["space"] == "P" and data["level"] == 1


def test_compute_grow_with_marking(capsys):
    code, out = run_cli(
        capsys, "compute", "grow", "--path", "ENE", "--ell", "1", "--sigma", "(2,1)"
    )
    assert code == 0
    assert "x[2]" in out


def test_compute_macdonald(capsys):
    code, out = run_cli(capsys, "compute", "macdonald", "--mu", "2")
    assert code == 0
    assert "s[1, 1]" in out and "s[2]" in out


def test_compute_lhs_rhs_agree(capsys):
    code1, out1 = run_cli(capsys, "compute", "lhs-eq1", "--alpha", "1,1", "--k", "1", "--format", "json")
    code2, out2 = run_cli(capsys, "compute", "rhs-eq1", "--alpha", "1,1", "--k", "1", "--format", "json")
    assert code1 == code2 == 0
    assert json.loads(out1) == json.loads(out2)


def test_compute_atom_expand(capsys):
    code, out = run_cli(capsys, "compute", "atom-expand", "--alpha", "1,1", "--k", "0", "--format", "json")
    assert code == 0
    recs = json.loads(out)
    assert all(set(r) == {"eta", "lam", "scalar"} for r in recs)


def test_verify_single_check(capsys):
    code, out = run_cli(capsys, "verify", "--check", "eq1", "--alpha", "2", "--k", "1")
    assert code == 0
    assert "pass" in out


def test_verify_specialized(capsys):
    code, out = run_cli(
        capsys, "verify", "--check", "eq2", "--alpha", "1,1", "--k", "0",
        "--mode", "specialized", "--seed", "3",
    )
    assert code == 0
    assert "pass (specialized)" in out


def test_verify_relation(capsys):
    code, out = run_cli(
        capsys, "verify", "--check", "operator_relations", "--relation", "zd_relation"
    )
    assert code == 0


def test_verify_json_format(capsys):
    code, out = run_cli(
        capsys, "verify", "--check", "figure2_stats", "--format", "json"
    )
    assert code == 0
    data = json.loads(out)
    assert data[0]["status"] == "pass"


def test_atoms_command(capsys):
    code, out = run_cli(capsys, "atoms", "--target", "eq1", "--n", "2", "--k", "1")
    assert code == 0
    assert "atom_positivity" in out
