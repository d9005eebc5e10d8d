import json
import subprocess
import sys

import pytest

from rikuna.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out else None), err


def test_poly_integer(capsys):
    code, env, _ = run(capsys, "poly", "--n", "1", "--t", "1")
    assert code == 0 and env["status"] == 0
    assert env["results"]["polynomials"][0]["coefficients"] == ["1", "-3", "-6", "-1"]
    assert set(env) == {"command", "parameters", "results", "warnings", "status"}


def test_poly_mod(capsys):
    code, env, _ = run(capsys, "poly", "--n", "1", "--t", "0", "--mod", "7")
    assert env["results"]["polynomials"][0]["coefficients"] == ["1", "0", "4", "6"]


def test_poly_range_jobs_matches_serial(capsys):
    _, serial, _ = run(capsys, "poly", "--n", "1", "--t-range=-3..3")
    _, par, _ = run(capsys, "poly", "--n", "1", "--t-range=-3..3", "--jobs", "2")
    assert serial["results"] == par["results"]
    assert [p["t"] for p in serial["results"]["polynomials"]] == [str(t) for t in range(-3, 4)]


def test_output_is_deterministic(capsys):
    outs = []
    for _ in range(2):
        main(["decompose", "--n", "2", "--t", "3", "--p", "7"])
        outs.append(capsys.readouterr().out)
    assert outs[0] == outs[1]


def test_disc_negative_printed_exponent(capsys):
    # t = 1 mod 3 with n = 2: the printed 3-exponent n*N - E/2 is -14
    code, env, _ = run(capsys, "disc", "--n", "2", "--t", "1000")
    rep = env["results"]["reports"][0]
    assert code == 0 and rep["disc_K_printed"] is None
    assert rep["primes"][0]["v_disc_K_printed"] == "-14" and rep["primes"][0]["v_disc_K"] == "22"
    assert all(isinstance(v, str) for v in env["parameters"].values())


def test_disc_flags_printed_exponent(capsys):
    code, env, _ = run(capsys, "disc", "--n", "1", "--t", "0")
    assert code == 0
    assert any("3^3" in w and "3^4" in w for w in env["warnings"])


def test_index_check(capsys):
    code, env, _ = run(capsys, "index", "--n", "2", "--t", "18", "--p", "7", "--check")
    prime = env["results"]["reports"][0]["primes"][0]
    assert code == 0 and prime["ind"] == "9" and prime["montes"]["total"] == "9"


def test_graph_census_and_dot(capsys, tmp_path):
    code, env, _ = run(capsys, "graph", "--q", "7")
    assert code == 0 and env["results"]["census"]["fixed_points"] == ["2", "4"]
    path = tmp_path / "g.dot"
    code, env, _ = run(capsys, "graph", "--q", "7", "--dot", str(path))
    assert code == 0 and path.read_text().startswith("digraph")


def test_graph_nonsplit_is_usage_error(capsys):
    code, env, err = run(capsys, "graph", "--q", "11", "--census")
    assert code == 2 and env is None and "not 1 mod 3" in err


def test_missing_t_is_usage_error(capsys):
    code, env, err = run(capsys, "poly", "--n", "1")
    assert code == 2 and "--t" in err


def test_bad_range_is_usage_error(capsys):
    code, _, _ = run(capsys, "poly", "--n", "1", "--t-range", "5..1")
    assert code == 2


def test_argparse_error_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["poly"])
    assert exc.value.code == 2


def test_io_failure_exits_1(capsys, tmp_path):
    code, env, _ = run(capsys, "graph", "--q", "7", "--dot", str(tmp_path / "no" / "g.dot"))
    assert code == 1 and env["status"] == 1 and "cannot write DOT file" in env["warnings"][0]


def test_precondition_exits_3(capsys):
    code, env, _ = run(capsys, "decompose", "--n", "1", "--t", "1", "--p", "3")
    assert code == 3 and env["results"] is None
    assert env["warnings"][0].startswith("precondition failed")
    code, _, _ = run(capsys, "poly", "--n", "1", "--t", "1", "--mod", "9")
    assert code == 3


def test_decompose_ell5(capsys):
    code, env, _ = run(capsys, "decompose", "--n", "2", "--t", "10", "--p", "31", "--zplus", "12", "--l", "5")
    rep = env["results"]["reports"][0]
    assert code == 0 and rep["observed"]["entries"] == [["25", "1"]] and rep["match"]


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("RIKUNA_SEED", "17")
    _, env, _ = run(capsys, "decompose", "--n", "1", "--t", "2", "--p", "13")
    assert env["parameters"]["seed"] == "17"


def test_console_script_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "rikuna.cli", "poly", "--n", "1", "--t", "0"],
        capture_output=True, text=True, check=True,
    )
    assert json.loads(out.stdout)["results"]["polynomials"][0]["text"] == "x^3 - 3*x - 1"
