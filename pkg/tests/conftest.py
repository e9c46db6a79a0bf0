import pytest

from crosscodes.oracle import CodeSet

# Z_8^2 codes for magnitude 2: a largest Lee code and a larger cross code.
EXAMPLE2_LEE = [(0, 0), (1, 4), (4, 2), (5, 6)]
EXAMPLE2_CROSS = [(1, 0), (4, 1), (6, 6), (0, 3), (3, 4)]

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def lee_code():
    return CodeSet.of(EXAMPLE2_LEE, m=3, t=2)


@pytest.fixture
def cross_code():
    return CodeSet.of(EXAMPLE2_CROSS, m=3, t=2)


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
