import json

import pytest


def test_no_subcommand_is_an_input_error(run_cli):
    assert run_cli().returncode == 2


def test_help_exits_cleanly(run_cli):
    proc = run_cli("--help")
    assert proc.returncode == 0
    for sub in ["analyze", "oracle", "invariant", "tree", "gauss", "rudy",
                "demo", "fuzz"]:
        assert sub in proc.stdout


def test_missing_file_exits_2(run_cli):
    proc = run_cli("analyze", "/no/such/file.json")
    assert proc.returncode == 2
    assert "error" in proc.stderr


def test_malformed_file_exits_2(run_cli, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    proc = run_cli("analyze", bad)
    assert proc.returncode == 2
    assert "cannot parse" in proc.stderr


def test_unknown_demo_exits_2(run_cli):
    proc = run_cli("demo", "nope")
    assert proc.returncode == 2
    assert "unknown demo" in proc.stderr


def test_invalid_tolerance_exits_2(run_cli, data):
    assert run_cli("analyze", data / "kernel_pair.json",
                   "--tol", "-1").returncode == 2


def test_fuzz_exit_codes(run_cli):
    assert run_cli("fuzz", "--count", "25").returncode == 0
    assert run_cli("fuzz", "--count", "25", "--inject-bug").returncode == 1
    assert run_cli("fuzz", "--count", "25", "--inject-bug",
                   "--json").returncode == 1


def test_fuzz_count_zero_is_an_empty_success(run_cli, cli_doc):
    assert run_cli("fuzz", "--count", "0").returncode == 0
    doc = cli_doc("fuzz", "--count", "0")
    assert doc["systems"] == 0
    assert doc["failures"] == []
    assert all(row["passes"] == 0 for row in doc["passes"])


def test_global_flags_accepted_in_both_positions(run_cli, data):
    before = run_cli("--json", "analyze", data / "kernel_pair.json")
    after = run_cli("analyze", data / "kernel_pair.json", "--json")
    assert before.returncode == after.returncode == 0
    assert json.loads(before.stdout) == json.loads(after.stdout)


def test_rudy_table_mode(run_cli):
    proc = run_cli("rudy", "--n", "3")
    assert proc.returncode == 0
    lines = proc.stdout.strip().splitlines()
    assert lines[0] == "n,r"
    assert lines[1].startswith("1,0.5")


@pytest.mark.parametrize("name,commutator", [
    ("three_chain", 1.0),      # weakly centered, phase not quasinormal
    ("kernel_pair", 0.0),
])
def test_oracle_phase_commutator_values(cli_doc, data, name, commutator):
    doc = cli_doc("oracle", data / f"{name}.json")
    assert doc["metrics"]["phase_quasinormal_commutator"] == pytest.approx(
        commutator, abs=1e-12)


def test_tree_commutator_value(cli_doc, data):
    doc = cli_doc("tree", data / "two_branch_tree.json")
    assert doc["matrix_commutator"] == pytest.approx(0.1875, abs=1e-12)
    assert doc["tree_weakly_centered"]["verdict"] is False
