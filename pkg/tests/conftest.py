import pytest

# filled by test_acceptance; one (criterion, passed, detail) tuple per check
ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_line():
    def record(name, passed, detail):
        ACCEPTANCE_LINES.append((name, passed, detail))

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_LINES:
        terminalreporter.write_line(f"{'PASS' if passed else 'FAIL'}  {name}: {detail}")
