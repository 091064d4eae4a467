import json

import pytest

import wcolib


def test_demo_names_frozen():
    assert wcolib.demo_names() == [
        "blackblack", "blackblackplus", "rudy", "gauss1d", "kernel2"]


def test_normalize_round_trips(data):
    for name in ["kernel_pair", "three_chain", "matched_merge", "identity3"]:
        doc = json.loads((data / f"{name}.json").read_text())
        normalized = wcolib.normalize_system(doc)
        assert wcolib.normalize_system(normalized) == normalized
        assert normalized["space"] == doc["space"]
    for name in ["two_branch_tree", "branch_fork_tree"]:
        doc = json.loads((data / f"{name}.json").read_text())
        normalized = wcolib.normalize_tree(doc)
        assert wcolib.normalize_tree(normalized) == normalized


def test_input_errors_surface_as_value_errors():
    with pytest.raises(ValueError, match="cannot parse"):
        wcolib.analyze("{broken")
    with pytest.raises(ValueError):
        wcolib.analyze({"space": {"atoms": [{"id": "a", "mass": 1.0}]},
                        "phi": {"a": "ghost"}})
    with pytest.raises(ValueError):
        wcolib.normalize_tree({"vertices": ["a"], "parent": {"a": "a"}})
    with pytest.raises(ValueError, match="unknown demo"):
        wcolib.demo("nope")
    assert issubclass(wcolib.InputError, ValueError)


def test_dict_and_text_inputs_agree(data):
    text = (data / "three_chain.json").read_text()
    assert wcolib.analyze(text) == wcolib.analyze(json.loads(text))


def test_fuzz_clean_run_passes_every_check():
    doc = wcolib.fuzz(count=60)
    assert doc["failures"] == []
    assert doc["systems"] == 60
    assert len(doc["passes"]) == 14
    assert all(row["passes"] == 60 for row in doc["passes"])


def test_fuzz_injected_bug_is_caught(validator):
    doc = wcolib.fuzz(count=120, inject_bug=True)
    assert doc["failures"]
    assert {f["check"] for f in doc["failures"]} == {"density_vs_commutator"}
    for failure in doc["failures"]:
        validator("system").validate(failure["system"])


def test_tolerance_changes_the_matrix_verdict(data):
    text = (data / "three_chain.json").read_text()
    strict = wcolib.oracle(text)
    loose = wcolib.oracle(text, tol=2.0)
    row = {r["name"]: r for d in [strict] for r in d["agreements"]}
    loose_row = {r["name"]: r for r in loose["agreements"]}
    assert row["phase_quasinormal"]["matrix"] is False
    assert loose_row["phase_quasinormal"]["matrix"] is True
    assert row["phase_quasinormal"]["agree"]
    assert loose_row["phase_quasinormal"]["agree"]


def test_analysis_lists_every_property(data):
    doc = wcolib.analyze((data / "identity3.json").read_text())
    names = [p["property"] for p in doc["properties"]]
    assert "weakly_centered" in names
    assert all(p["verdict"] for p in doc["properties"])
