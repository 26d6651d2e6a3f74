import pytest

ACCEPTANCE = []


@pytest.fixture
def record():
    """Collect one pass/fail line per acceptance check for the terminal summary."""
    def _record(label, ok, detail=""):
        ACCEPTANCE.append((label, bool(ok), detail))
        return ok
    return _record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, detail in ACCEPTANCE:
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  {label}  {detail}")
