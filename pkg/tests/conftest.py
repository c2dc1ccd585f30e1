import pytest

_lines = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line for the acceptance report."""

    def record(label, ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'}  {label}" + (f"  ({detail})" if detail else "")
        _lines.append(line)
        print(line)
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if _lines:
        terminalreporter.section("acceptance criteria")
        for line in _lines:
            terminalreporter.write_line(line)
