import json
import os
import pathlib
import subprocess
import sys

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

ROOT = pathlib.Path(os.environ.get("WCO_ROOT",
                                   pathlib.Path(__file__).resolve().parents[2]))
BIN = os.environ.get("WCO_BIN", str(ROOT / "build" / "tools" / "wco"))
SCHEMA_DIR = ROOT / "docs" / "schema"

try:
    import wcolib  # noqa: F401
except ImportError:  # direct pytest run against a default build tree
    sys.path.insert(0, str(ROOT / "build" / "bindings"))


@pytest.fixture(scope="session")
def data():
    return ROOT / "data"


@pytest.fixture(scope="session")
def run_cli():
    def run(*args):
        return subprocess.run([BIN, *map(str, args)],
                              capture_output=True, text=True)

    return run


@pytest.fixture(scope="session")
def cli_doc(run_cli):
    """Run the CLI with --json and parse stdout, asserting success."""

    def run(*args):
        proc = run_cli(*args, "--json")
        assert proc.returncode == 0, proc.stderr
        return json.loads(proc.stdout)

    return run


@pytest.fixture(scope="session")
def validator():
    resources = []
    for path in SCHEMA_DIR.glob("*.schema.json"):
        schema = json.loads(path.read_text())
        resources.append((schema["$id"], Resource.from_contents(schema)))
    registry = Registry().with_resources(resources)

    def make(name):
        schema = json.loads((SCHEMA_DIR / f"{name}.schema.json").read_text())
        return Draft202012Validator(schema, registry=registry)

    return make
