import pytest

ACCEPTANCE_LINES = []


@pytest.fixture
def report(request):
    """Record one acceptance line and fail the test when ``ok`` is false."""
    def _report(ok, detail=""):
        line = f"{'PASS' if ok else 'FAIL'} {request.node.name} {detail}".rstrip()
        ACCEPTANCE_LINES.append(line)
        print(f"[ACCEPTANCE] {line}")
        assert ok, detail
    return _report


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
