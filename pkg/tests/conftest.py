import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("wittkit", deadline=None, max_examples=40, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("wittkit")

CRITERIA = pytest.StashKey[dict]()


@pytest.fixture
def criterion(request):
    """Record one PASS/FAIL line per acceptance criterion for the terminal summary."""
    lines = request.config.stash.setdefault(CRITERIA, {})

    def record(number, ok, detail):
        lines[number] = f"CRITERION {number}: {'PASS' if ok else 'FAIL'} {detail}"
        return ok
    return record


def pytest_terminal_summary(terminalreporter, config):
    lines = config.stash.get(CRITERIA, {})
    if lines:
        terminalreporter.section("acceptance criteria")
        for number in sorted(lines):
            terminalreporter.write_line(lines[number])
