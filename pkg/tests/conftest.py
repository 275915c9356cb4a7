import pytest

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def criterion(request):
    """Yield a recorder; the one-line verdict is stored whether the body passes or not."""
    number, title = request.node.get_closest_marker("criterion").args
    state = {"detail": ""}

    def note(detail: str) -> None:
        state["detail"] = detail

    yield note
    failed = getattr(request.node, "_failed", True)
    verdict = "FAIL" if failed else "PASS"
    suffix = f" ({state['detail']})" if state["detail"] else ""
    ACCEPTANCE_LINES[number] = f"criterion {number} {title}: {verdict}{suffix}"
    print(ACCEPTANCE_LINES[number])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    if report.when == "call":
        item._failed = report.failed


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
