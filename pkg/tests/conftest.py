import os
import sys

import numpy as np
import pytest

sys.path.insert(0, os.path.dirname(__file__))

# filled by test_acceptance.py, printed once at the end of the session
CRITERIA: dict = {}


def pytest_addoption(parser):
    parser.addoption("--run-slow", action="store_true", help="also run long-running checks")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip = pytest.mark.skip(reason="long-running; use --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def pytest_terminal_summary(terminalreporter):
    if not CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(CRITERIA, key=lambda k: (int(k.split(".")[0]), k)):
        verdict, detail = CRITERIA[key]
        terminalreporter.write_line(f"criterion {key}: {verdict}  {detail}")


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)
