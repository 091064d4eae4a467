"""The CLI --json output and the bindings must produce identical documents."""

import pytest

import wcolib

SYSTEMS = ["kernel_pair", "three_chain", "matched_merge", "identity3"]
TREES = ["two_branch_tree", "branch_fork_tree"]


@pytest.mark.parametrize("name", SYSTEMS)
def test_analyze_parity(cli_doc, data, name):
    path = data / f"{name}.json"
    assert cli_doc("analyze", path) == wcolib.analyze(path.read_text())


@pytest.mark.parametrize("name", SYSTEMS)
def test_oracle_parity(cli_doc, data, name):
    path = data / f"{name}.json"
    assert cli_doc("oracle", path) == wcolib.oracle(path.read_text())
    assert cli_doc("oracle", path, "--dump-matrix") == wcolib.oracle(
        path.read_text(), dump_matrix=True)


@pytest.mark.parametrize("name", SYSTEMS)
def test_invariant_parity(cli_doc, data, name):
    path = data / f"{name}.json"
    assert cli_doc("invariant", path) == wcolib.invariant(path.read_text())


@pytest.mark.parametrize("name", TREES)
def test_tree_parity(cli_doc, data, name):
    path = data / f"{name}.json"
    assert cli_doc("tree", path) == wcolib.tree(path.read_text())
    assert cli_doc("tree", path, "--interior-only") == wcolib.tree(
        path.read_text(), interior_only=True)


def test_gauss_parity(cli_doc):
    assert cli_doc("gauss") == wcolib.gauss()
    custom = cli_doc("gauss", "--alpha", "1.5", "--coeffs", "2,1", "--dim",
                     "2", "--samples", "200", "--box", "5", "--seed", "9")
    assert custom == wcolib.gauss(alpha=1.5, coeffs=[2, 1], dim=2,
                                  samples=200, box_half_width=5, seed=9)
    entire = cli_doc("gauss", "--alpha", "0.5", "--entire")
    assert entire == wcolib.gauss(alpha=0.5, entire=True)


def test_rudy_parity(cli_doc):
    assert cli_doc("rudy", "--n", "7") == wcolib.rudy(7)


@pytest.mark.parametrize("name", wcolib.demo_names())
def test_demo_parity(cli_doc, name):
    assert cli_doc("demo", name) == wcolib.demo(name)


def test_demo_parity_with_arguments(cli_doc):
    doc = cli_doc("demo", "blackblack", "--alpha", "2", "--depth", "3")
    assert doc == wcolib.demo("blackblack", alpha=2, depth=3)


def test_fuzz_parity(cli_doc):
    doc = cli_doc("fuzz", "--count", "40", "--seed", "7", "--max-atoms", "6")
    assert doc == wcolib.fuzz(count=40, seed=7, max_atoms=6)
