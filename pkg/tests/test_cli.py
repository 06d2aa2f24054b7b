"""Command line contract: exit codes, formats, and frozen anchor outputs."""

import csv
import io
import json

import numpy as np
import pytest

from kblockpos import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_solve_negative_verdict_exits_two(capsys):
    code, out, _ = run_cli(
        capsys, "solve", "--k", "2", "--N", "2", "--d", "3", "--isotropic-alpha", "-0.8"
    )
    assert code == 2
    assert "-0.75" in out
    assert "inconclusive" in out


def test_solve_certified_exits_zero(capsys):
    code, out, _ = run_cli(
        capsys, "solve", "--k", "2", "--N", "1", "--d", "3", "--isotropic-alpha", "-0.3"
    )
    assert code == 0
    assert "hierarchy value: 0" in out
    assert "certified nonnegative" in out


def test_solve_json_format(capsys):
    code, out, _ = run_cli(
        capsys,
        "solve", "--k", "2", "--N", "2", "--d", "2",
        "--isotropic-alpha", "-0.8", "--format", "json",
    )
    assert code == 2
    data = json.loads(out)
    assert data["k"] == 2 and data["d"] == 2 and data["N"] == 2
    assert data["hierarchy_value"] == pytest.approx(-0.3354102, abs=1e-6)
    assert data["blocks"][0]["shape"] == [2, 1]
    assert data["blocks"][0]["status"] == "optimal"


def test_solve_csv_format(capsys):
    code, out, _ = run_cli(
        capsys,
        "solve", "--k", "2", "--N", "1", "--d", "4",
        "--isotropic-alpha", "-0.3", "--format", "csv",
    )
    assert code == 2
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 1
    assert rows[0]["value"] == "-0.2"
    assert rows[0]["clipped"] == "false"


def test_solve_witness_file(capsys, tmp_path):
    # The isotropic d=2, alpha=-1 matrix written out longhand.
    entries = [[[0.0, 0.0] for _ in range(4)] for _ in range(4)]
    entries[1][1] = entries[2][2] = [1.0, 0.0]
    entries[0][3] = entries[3][0] = [-1.0, 0.0]
    path = tmp_path / "w.json"
    path.write_text(json.dumps({"d": 2, "entries": entries}))
    code, out, _ = run_cli(
        capsys, "solve", "--k", "2", "--N", "1", "--witness-file", str(path)
    )
    assert code == 2
    assert f"file:{path}" in out
    assert "hierarchy value: -1" in out


def test_solve_requires_witness(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["solve", "--k", "2", "--N", "1"])
    assert exc.value.code == 1


def test_solve_rejects_conflicting_witness_flags(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(
            ["solve", "--k", "2", "--N", "1", "--d", "2",
             "--isotropic-alpha", "-0.5", "--witness-file", "x.json"]
        )
    assert exc.value.code == 1


def test_solve_missing_witness_file_is_input_error(capsys):
    code, _, err = run_cli(
        capsys, "solve", "--k", "2", "--N", "1", "--witness-file", "/nonexistent.json"
    )
    assert code == 1
    assert "error:" in err


def test_bad_witness_file_is_input_error(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"d": 2, "entries": [[1, 2], [3, 4]]}))
    code, _, err = run_cli(
        capsys, "solve", "--k", "2", "--N", "1", "--witness-file", str(path)
    )
    assert code == 1
    assert "error:" in err


def test_sizes_text_lines(capsys):
    for args, want in [
        (("2", "4", "3"), "4096 | 512 | 768 | 2 | 3"),
        (("2", "2", "2"), "64 | 16 | 2"),
        (("2", "5", "2"), "1000 | 250 | 2"),
    ]:
        k, d, n = args
        code, out, _ = run_cli(capsys, "sizes", "--k", k, "--d", d, "--N", n)
        assert code == 0
        assert out.strip() == want


def test_sizes_json(capsys):
    code, out, _ = run_cli(capsys, "sizes", "--k", "2", "--d", "3", "--N", "3", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data == [
        {"shape": [2, 2], "unreduced_dim": 1296, "block_dim": 162, "d_lambda": 2},
        {"shape": [3, 1], "unreduced_dim": 1296, "block_dim": 243, "d_lambda": 3},
    ]


def test_sweep_csv_anchors(capsys):
    code, out, _ = run_cli(
        capsys,
        "sweep", "--k", "2", "--d", "3", "--levels", "3",
        "--alpha-start", "-1", "--alpha-end", "-0.8", "--alpha-step", "0.05",
    )
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["alpha"] for r in rows] == ["-1", "-0.95", "-0.9", "-0.85", "-0.8"]
    by_alpha = {r["alpha"]: r for r in rows}
    assert by_alpha["-0.9"]["value"] == "-0.7"
    assert by_alpha["-0.9"]["N"] == "3"
    assert by_alpha["-0.9"]["clipped"] == "false"
    blocks = dict(part.split("=") for part in by_alpha["-0.9"]["blocks"].split("|"))
    assert set(blocks) == {"(2,2)", "(3,1)"}


def test_sweep_output_is_byte_stable(capsys, tmp_path):
    args = [
        "sweep", "--k", "2", "--d", "4", "--levels", "1,2",
        "--alpha-start", "-0.8", "--alpha-end", "-0.7", "--alpha-step", "0.05",
        "--output",
    ]
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    assert cli.main(args + [str(p1)]) == 0
    assert cli.main(args + [str(p2)]) == 0
    b1, b2 = p1.read_bytes(), p2.read_bytes()
    assert b1 == b2
    rows = list(csv.DictReader(io.StringIO(b1.decode())))
    assert len(rows) == 6
    by_key = {(r["N"], r["alpha"]): r for r in rows}
    assert by_key[("2", "-0.75")]["value"] == "-1.04601"
    assert by_key[("1", "-0.8")]["value"] == "-2.2"


def test_sweep_text_format(capsys):
    code, out, _ = run_cli(
        capsys,
        "sweep", "--k", "2", "--d", "2", "--levels", "1",
        "--alpha-start", "-0.5", "--alpha-end", "-0.5", "--alpha-step", "0.1",
        "--format", "text",
    )
    assert code == 0
    lines = out.splitlines()
    assert lines[0].split() == ["k", "d", "N", "alpha", "value", "clipped", "blocks"]
    assert len(lines) == 2


def test_sweep_rejects_bad_grid(capsys):
    code, _, err = run_cli(
        capsys,
        "sweep", "--k", "2", "--d", "2",
        "--alpha-start", "-0.5", "--alpha-end", "-1.0", "--alpha-step", "0.1",
    )
    assert code == 1
    assert "error:" in err


def test_rep_matches_delta_lambda(capsys):
    from kblockpos.sym_rep import delta_lambda

    code, out, _ = run_cli(
        capsys, "rep", "--shape", "2,1", "--j", "2", "--k", "2", "--d", "2",
        "--format", "json",
    )
    assert code == 0
    data = json.loads(out)
    assert data["N"] == 2 and data["dim"] == 16
    got = np.array(data["matrix"])
    want = delta_lambda((2, 1), 2, 2, 2, 2)
    assert np.max(np.abs(got - want)) < 1e-12


def test_rep_text_contains_matrix(capsys):
    code, out, _ = run_cli(capsys, "rep", "--shape", "(2,1)", "--j", "2", "--k", "2")
    assert code == 0
    assert "swap(2,3)" in out
    assert "0.866025" in out


def test_schur_text_and_json(capsys):
    code, out, _ = run_cli(capsys, "schur", "--k", "2", "--n", "2")
    assert code == 0
    assert "dim=4" in out
    assert "shape (1,1)" in out
    code, out, _ = run_cli(capsys, "schur", "--k", "2", "--n", "2", "--format", "json")
    data = json.loads(out)
    mat = np.array([[complex(re, im) for re, im in row] for row in data["matrix"]])
    assert np.max(np.abs(mat @ mat.conj().T - np.eye(4))) < 1e-10
    assert data["row_labels"][0] == {"shape": [1, 1], "p": 0, "q": 0}


def test_verify_suite_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "ratio")
    assert code == 0
    lines = [l for l in out.splitlines() if l]
    assert all(l.startswith("PASS") for l in lines[:-1])
    assert lines[-1].endswith("checks passed")


def test_verify_rejects_unknown_suite(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["verify", "nonsense"])
    assert exc.value.code == 1


def test_unknown_command_exits_one(capsys):
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 1
