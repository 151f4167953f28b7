"""Command-line surface: literals, subcommands, exit codes, outputs.

Exit code contract: 0 ok, 1 failed verification, 2 parse/config,
3 precondition, 4 infinite solution set, 5 I/O.
"""

import json

import pytest

from crossratio.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ---------------------------------------------------------------- eval


def test_eval_rational(capsys):
    code, out, _ = run_cli(capsys, "eval", "--field", "rational", "2", "3", "1", "0")
    assert code == 0 and out.strip() == "3/4"


def test_eval_quaternion(capsys):
    code, out, _ = run_cli(capsys, "eval", "--field", "quaternion", "i", "j", "k", "0")
    assert code == 0 and out.strip() == "1/2+1/2i-1/2j-1/2k"


def test_eval_degenerate_pair(capsys):
    code, out, _ = run_cli(capsys, "eval", "--field", "rational", "2", "2", "1", "0")
    assert code == 0 and out.strip() == "1"


def test_eval_infinity_literal(capsys):
    code, out, _ = run_cli(capsys, "eval", "--field", "rational", "3", "5", "1", "inf")
    assert code == 0 and out.strip() == "1/2"
    code, out, _ = run_cli(capsys, "eval", "--field", "rational", "2", "3", "1", "2")
    assert code == 0 and out.strip() == "inf"


def test_eval_two_infinities_is_a_precondition_failure(capsys):
    code, _, err = run_cli(capsys, "eval", "--field", "rational", "inf", "inf", "1", "0")
    assert code == 3 and "error" in err


def test_eval_three_equal_is_a_precondition_failure(capsys):
    code, _, err = run_cli(capsys, "eval", "--field", "rational", "2", "2", "2", "0")
    assert code == 3


def test_eval_bad_literal(capsys):
    code, _, err = run_cli(capsys, "eval", "--field", "rational", "2", "x", "1", "0")
    assert code == 2


def test_nonprime_field_selector(capsys):
    code, _, err = run_cli(capsys, "eval", "--field", "gf:4", "2", "3", "1", "0")
    assert code == 2


def test_gf_eval(capsys):
    code, out, _ = run_cli(capsys, "eval", "--field", "gf:7", "2", "3", "1", "0")
    assert code == 0
    # oracle: ((3-0)*(2-1)) * inverse((2-0)*(3-1)) mod 7
    expected = (3 * 1 * pow(2 * 2, 5, 7)) % 7
    assert out.strip() == str(expected)


# ---------------------------------------------------------------- solve


def test_solve_example(capsys):
    code, out, _ = run_cli(capsys, "solve", "--field", "rational", "3/4", "2", "3", "1")
    assert code == 0 and out.strip() == "0"


def test_solve_round_trips_through_eval(capsys):
    code, out, _ = run_cli(capsys, "solve", "--field", "quaternion", "2+i", "i", "j", "k")
    assert code == 0
    d = out.strip()
    code, out, _ = run_cli(capsys, "eval", "--field", "quaternion", "i", "j", "k", d)
    assert code == 0 and out.strip() == "2+i"


def test_solve_rejects_zero_and_one(capsys):
    for bad in ("0", "1"):
        code, _, err = run_cli(capsys, "solve", "--field", "rational", bad, "2", "3", "1")
        assert code == 3


def test_solve_infinite_solution_set_has_its_own_exit(capsys):
    # ratio value equal to the three-point ratio of (A,B,C): every D works
    code, _, err = run_cli(capsys, "solve", "--field", "rational", "2", "5", "3", "1")
    assert code == 4


# ---------------------------------------------------------------- verify


def test_verify_text_report(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--field", "gf:101", "--seed", "3", "--samples", "5"
    )
    assert code == 0
    assert "suite passed" in out
    assert "PASS" in out and "SKIP" in out and "FAIL" not in out


def test_verify_json_report_schema(capsys):
    code, out, _ = run_cli(
        capsys,
        "verify", "--field", "rational", "--seed", "3", "--samples", "4",
        "--format", "json",
    )
    assert code == 0
    report = json.loads(out)
    assert {"field", "seed", "samples", "timestamp", "passed", "checks"} <= set(report)
    for rec in report["checks"]:
        assert {"name", "skipped", "passed", "samples_run", "witnesses"} <= set(rec)


def test_verify_is_deterministic_modulo_timestamp(capsys):
    args = ("verify", "--field", "gf:5", "--seed", "9", "--samples", "4", "--format", "json")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    a, b = json.loads(first), json.loads(second)
    a.pop("timestamp"), b.pop("timestamp")
    assert a == b


def test_verify_writes_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, _, _ = run_cli(
        capsys,
        "verify", "--field", "gf:5", "--seed", "1", "--samples", "3",
        "--format", "json", "--out", str(target),
    )
    assert code == 0
    assert json.loads(target.read_text())["passed"] is True


def test_verify_unwritable_output_is_io_error(capsys):
    code, _, err = run_cli(
        capsys,
        "verify", "--field", "gf:5", "--seed", "1", "--samples", "3",
        "--out", "/nonexistent-dir/report.json",
    )
    assert code == 5


# ---------------------------------------------------------------- construct


def test_construct_add(capsys):
    code, out, _ = run_cli(
        capsys,
        "construct", "add", "--field", "rational",
        "--O", "0,0", "--I", "1,0", "--A", "2,0", "--B", "3,0", "--aux", "0,1",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[-1] == "5,0"
    assert any("P1" in line for line in lines)
    assert sum(1 for line in lines if line.startswith("line ")) >= 3


def test_construct_mul(capsys):
    code, out, _ = run_cli(
        capsys,
        "construct", "mul", "--field", "rational",
        "--O", "0,0", "--I", "1,0", "--A", "2,0", "--B", "3,0", "--aux", "0,1",
    )
    assert code == 0 and out.strip().splitlines()[-1] == "6,0"


def test_construct_default_aux(capsys):
    code, out, _ = run_cli(
        capsys,
        "construct", "add", "--field", "quaternion",
        "--O", "0,0", "--I", "1,0", "--A", "i,0", "--B", "j,0",
    )
    assert code == 0 and out.strip().splitlines()[-1] == "i+j,0"


def test_construct_aux_on_axis(capsys):
    code, _, err = run_cli(
        capsys,
        "construct", "add", "--field", "rational",
        "--O", "0,0", "--I", "1,0", "--A", "2,0", "--B", "3,0", "--aux", "4,0",
    )
    assert code == 3


def test_construct_svg(tmp_path, capsys):
    target = tmp_path / "figure.svg"
    code, _, _ = run_cli(
        capsys,
        "construct", "mul", "--field", "rational",
        "--O", "0,0", "--I", "1,0", "--A", "2,0", "--B", "3,0", "--aux", "0,1",
        "--svg", str(target),
    )
    assert code == 0
    body = target.read_text()
    assert body.startswith("<svg") and "</svg>" in body
    for label in ("O", "I", "A", "B", "B1", "P1", "C"):
        assert f">{label}<" in body


def test_construct_svg_needs_rational_plane(tmp_path, capsys):
    code, _, err = run_cli(
        capsys,
        "construct", "add", "--field", "quaternion",
        "--O", "0,0", "--I", "1,0", "--A", "i,0", "--B", "j,0",
        "--svg", str(tmp_path / "x.svg"),
    )
    assert code == 3


# ---------------------------------------------------------------- desargues


def test_desargues_tally(capsys):
    code, out, _ = run_cli(
        capsys, "desargues", "--field", "rational", "--count", "3", "--seed", "7"
    )
    assert code == 0
    assert "3/3 pass" in out


def test_desargues_config_hash_is_stable(capsys):
    args = ("desargues", "--field", "rational", "--count", "1", "--seed", "7")
    _, first, _ = run_cli(capsys, *args)
    _, second, _ = run_cli(capsys, *args)
    line = [l for l in first.splitlines() if l.startswith("config-hash:")]
    assert line and first == second


def test_desargues_modes_give_different_configs(capsys):
    _, par, _ = run_cli(
        capsys, "desargues", "--field", "gf:101", "--count", "2", "--seed", "1",
        "--mode", "parallel", "--format", "json",
    )
    _, con, _ = run_cli(
        capsys, "desargues", "--field", "gf:101", "--count", "2", "--seed", "1",
        "--mode", "concurrent", "--format", "json",
    )
    assert json.loads(par)["config_hash"] != json.loads(con)["config_hash"]
    assert json.loads(con)["passes"] == 2


def test_desargues_tamper_flag_is_detected(capsys):
    code, out, _ = run_cli(
        capsys,
        "desargues", "--field", "rational", "--count", "2", "--seed", "7",
        "--flip-c-prime",
    )
    assert code == 1
    assert "0/2 pass" in out


def test_desargues_tamper_flag_alias(capsys):
    code, out, _ = run_cli(
        capsys,
        "desargues", "--field", "rational", "--count", "1", "--seed", "7",
        "--flip-C'",
    )
    assert code == 1


# ---------------------------------------------------------------- parser


def test_missing_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_unknown_subcommand_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
