import io
import sys
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

import pytest

from roughset import induce_rules, reference_rules, training_fixture
from roughset.cli import main

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def table6():
    return training_fixture()


@pytest.fixture(scope="session")
def ref_rules():
    return reference_rules()


@pytest.fixture(scope="session")
def induced6(table6):
    return induce_rules(table6)


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR


def invoke_cli(argv):
    """Run the CLI in-process; returns (exit_code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(argv)
    return code, out.getvalue(), err.getvalue()


def invoke_cli_twice(argv):
    """Run twice and assert byte-identical stdout; returns the first result.

    Every CLI test goes through here so the determinism contract is checked
    on each invocation the suite performs.
    """
    first = invoke_cli(argv)
    second = invoke_cli(argv)
    assert first[1] == second[1], f"non-deterministic stdout for {argv}"
    assert first[0] == second[0]
    return first


@pytest.fixture
def run_cli():
    return invoke_cli_twice
