import sys
import time
from pathlib import Path

import pytest

from desinc.harness import SweepConfig, run_sweep

# oracle.py sits next to the tests
sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def reference_sweep():
    """Both built-in functions, all four strategies, n = 2..40, 20001-point grid."""
    start = time.perf_counter()
    rows = {label: run_sweep(SweepConfig(label)) for label in ("f1", "f2")}
    return rows, time.perf_counter() - start


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
