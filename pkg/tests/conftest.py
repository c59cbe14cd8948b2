import os
import sys

# every basis computed during the tests is re-checked with Buchberger's criterion
os.environ.setdefault("MATREP_CHECK_BASES", "1")

from pathlib import Path  # noqa: E402

import pytest  # noqa: E402

from matrep.cli import parse_matroid, parse_matrix  # noqa: E402

DATA = Path(__file__).resolve().parents[1] / "src" / "matrep" / "data"


def load_matroid(name: str):
    return parse_matroid((DATA / f"{name}.txt").read_text())


def load_matrix(name: str):
    return parse_matrix((DATA / f"{name}.mat").read_text())


@pytest.fixture(scope="session")
def fano():
    return load_matroid("fano")


@pytest.fixture(scope="session")
def nonpappus():
    return load_matroid("nonpappus")


@pytest.fixture(scope="session")
def gf4_order9():
    return load_matroid("gf4_order9")


@pytest.fixture(scope="session")
def bases_contradiction():
    return load_matroid("bases_contradiction")


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.report_lines():
            terminalreporter.write_line(line)
