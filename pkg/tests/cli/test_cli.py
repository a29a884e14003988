import json

import pytest
from click.testing import CliRunner

from cli.main import cli

BAD_TRIPLE = """\
params 3 4 1 2
C_S
q 3 rows 0 cols 8
C_R
q 3 rows 2 cols 8
1 1 1 0 | 0 0 0 0
0 0 0 0 | 1 1 1 0
"""


@pytest.fixture
def runner():
    return CliRunner()


@pytest.fixture
def rs_file(runner, tmp_path):
    path = tmp_path / "rs5.txt"
    result = runner.invoke(cli, ["rs-build", "5", "2", "1", "--output", str(path)])
    assert result.exit_code == 0, result.output
    return path


def run_json(runner, *args):
    result = runner.invoke(cli, ["--json", *args])
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


def test_table1_json(runner):
    report = run_json(runner, "table1", "5", "2", "1")
    assert report["command"] == "table1"
    assert report["inputs"] == {"q": 5, "k": 2, "s": 1}
    assert report["results"]["advantage"] is False
    assert run_json(runner, "table1", "4", "2", "0")["results"]["advantage"] is True


def test_rs_build_prints_the_triple(runner):
    report = run_json(runner, "rs-build", "5", "2", "1")
    assert report["results"]["triple"].startswith("params 5 5 2 1\nadvance 1 2\n")
    assert report["results"]["thresholds"]["advance_max"] == 2


def test_validate_and_classify(runner, rs_file):
    validated = run_json(runner, "validate", str(rs_file))["results"]
    assert validated["valid"]
    assert validated["dims"] == [2, 4, 5]
    assert validated["advance_set"] == [1, 2]
    assert not validated["completed_c_max"]

    records = run_json(runner, "classify", str(rs_file), "--subset", "1,2,3;2,3,4,5")["results"]["records"]
    assert [r["access_class"] for r in records] == ["forbidden", "qualified"]


def test_advance_check(runner, rs_file):
    results = run_json(runner, "advance-check", str(rs_file))["results"]
    assert results["advance_shareable"]
    assert results["solvable_for_all_cosets"]
    not_shareable = run_json(runner, "advance-check", str(rs_file), "--set", "1,2,3")["results"]
    assert not not_shareable["advance_shareable"]


def test_advance_rep_is_supported_off_the_advance_set(runner, rs_file):
    report = run_json(runner, "advance-rep", str(rs_file), "--secret", "1,0", "--rand", "2")
    (record,) = report["results"]["records"]
    representative = record["representative"]
    assert len(representative) == 10
    assert [representative[i] for i in (0, 1, 5, 6)] == [0, 0, 0, 0]


def test_advance_rep_needs_a_coset_choice(runner, rs_file):
    result = runner.invoke(cli, ["advance-rep", str(rs_file), "--secret", "1,0"])
    assert result.exit_code == 2
    seeded = run_json(runner, "--seed", "3", "advance-rep", str(rs_file), "--secret", "1,0")
    assert seeded["seed"] == 3
    assert len(seeded["inputs"]["randomness"]) == 1


def test_invalid_triple_file_reports_the_error_class(runner, tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text(BAD_TRIPLE, encoding="utf-8")
    result = runner.invoke(cli, ["validate", str(path)])
    assert result.exit_code == 1
    assert "error[DimensionMismatch]" in result.stderr


def test_parameter_errors_exit_with_status_one(runner):
    result = runner.invoke(cli, ["rs-build", "5", "1", "1"])
    assert result.exit_code == 1
    assert "error[" in result.stderr
    result = runner.invoke(cli, ["gv-check", "2", "2", "1", "1", "1", "1", "2"])
    assert result.exit_code == 1


def test_usage_errors_exit_with_status_two(runner, tmp_path):
    assert runner.invoke(cli, ["table1", "5", "2"]).exit_code == 2
    assert runner.invoke(cli, ["validate", str(tmp_path / "missing.txt")]).exit_code == 2
    assert runner.invoke(cli, ["classical-compare"]).exit_code == 2


def test_verify_sim_on_chosen_subsets(runner, rs_file):
    report = run_json(runner, "verify-sim", str(rs_file), "--subsets", "1,2,3;2,3,4,5")
    certification = report["results"]["certification"]
    assert certification["all_passed"]
    assert certification["advance_shareable"]


def test_classical_compare_one_time_pad(runner):
    results = run_json(runner, "classical-compare", "--one-time-pad")["results"]
    assert results["all_agree"]
    forgets = results["dealer_forgets"]
    assert forgets["exact_equality"]
    assert forgets["original_max_gain"] == pytest.approx(1.0)


def test_classical_compare_ramp_shamir(runner):
    results = run_json(runner, "classical-compare", "--ramp-shamir", "5", "5", "2", "1", "--set", "1")["results"]
    assert results["all_agree"]
    assert results["dealer_forgets"]["advance_set"] == [1]


def test_gv_commands(runner):
    check = run_json(runner, "gv-check", "2", "2", "1", "1", "2", "2", "2")["results"]
    assert check["lhs"] == "22/5"
    assert not check["feasible"]
    ratios = run_json(runner, "gv-enumerate", "2", "2", "1", "1", "--max-delta", "2")["results"]["ratios"]
    assert ratios["total_chains"] == 45
    asymptotic = run_json(
        runner, "gv-asymptotic", "2", "0.25", "0.125", "--eps-q", "0.1", "--eps-f", "0.2", "--eps-t", "0.1",
        "--length", "80",
    )["results"]
    assert asymptotic["code_parameters"]["k"] == 20


@pytest.mark.parametrize("name", ["gottesman", "example3b", "bell-pair", "ternary-rs4"])
def test_demo(runner, name):
    results = run_json(runner, "demo", name)["results"]
    assert results["certification"]["all_passed"]
    assert results["advance_reps"]
    if name in ("example3b", "ternary-rs4"):
        assert results["listed_basis_matches"] is True
        assert results["triple"].startswith("params 3 4 2 2\n")
    else:
        assert "listed_basis_matches" not in results


def test_save_writes_the_report(runner, data_dir):
    run_json(runner, "--save", "table1", "5", "2", "1")
    saved = json.loads((data_dir / "table1-5-2-1" / "table1.json").read_text(encoding="utf-8"))
    assert saved["command"] == "table1"


def test_demo_save_writes_every_phase(runner, data_dir):
    run_json(runner, "--save", "demo", "bell-pair")
    run_dir = data_dir / "demo-bell-pair"
    phases = {path.stem for path in run_dir.glob("*.json")}
    assert {"scheme", "access_structure", "advance_reps", "certification", "demo"} <= phases


@pytest.mark.parametrize(
    "args",
    [
        ("advance-rep", "{rs_file}", "--secret", "1,0"),
        ("verify-sim", "{rs_file}", "--subsets", "1,2;1,2,3,4"),
        ("demo", "example3b"),
    ],
)
def test_seeded_json_output_is_byte_identical(runner, rs_file, args):
    argv = ["--json", "--seed", "3", *(arg.format(rs_file=rs_file) for arg in args)]
    first = runner.invoke(cli, argv)
    second = runner.invoke(cli, argv)
    assert first.exit_code == 0, first.output
    assert first.stdout == second.stdout
    assert json.loads(first.stdout)["seed"] == 3
