import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from iskp.calibration import load_profile  # noqa: E402
from iskp.units import default_database  # noqa: E402

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def db():
    return default_database()


@pytest.fixture(scope="session")
def cal_default():
    return load_profile("default")


@pytest.fixture(scope="session")
def cal_repro():
    return load_profile("reproduction")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
