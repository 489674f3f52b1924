import pytest

# (criterion number, passed, description), filled in by test_acceptance.py
ACCEPTANCE = []


def record(number, passed, text):
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {text}"
    print(line)
    ACCEPTANCE.append((number, passed, line))
    return passed


@pytest.fixture
def acceptance():
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for _, _, line in sorted(ACCEPTANCE):
        terminalreporter.write_line(line)
