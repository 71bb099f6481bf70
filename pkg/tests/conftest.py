import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("repo", deadline=None, max_examples=40,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("repo")

ZETA_TOKENS = ["1", "i", "-1", "-i"]

# filled by test_acceptance, reported once at the end of the run
ACCEPTANCE_LINES: list = []


@pytest.fixture(params=ZETA_TOKENS)
def zeta(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
