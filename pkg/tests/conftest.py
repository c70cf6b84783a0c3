import pytest

# filled in by test_acceptance; printed once at the end of the run
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[k])


@pytest.fixture
def criterion(request):
    """Record a PASS/FAIL line for one acceptance criterion.

    The test calls ``criterion(n, summary)`` up front; the line flips to PASS
    only if the test body finishes without an assertion error.
    """
    state = {}

    def start(n: int, summary: str):
        state["n"], state["summary"] = n, summary

    yield start
    if "n" in state:
        failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
        ACCEPTANCE_LINES[state["n"]] = f"criterion {state['n']:>2}: {'FAIL' if failed else 'PASS'}  {state['summary']}"
        print(ACCEPTANCE_LINES[state["n"]])


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call":
        item.rep_call = rep
