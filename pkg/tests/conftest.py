import pytest
from hypothesis import HealthCheck, settings

from padic_gm import PrecisionProfile

settings.register_profile(
    "padic",
    deadline=None,
    max_examples=25,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.function_scoped_fixture],
)
settings.load_profile("padic")

_ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def P():
    """The default profile p = 5, N = 6, M = 16, Q = 64."""
    return PrecisionProfile()


@pytest.fixture(scope="session")
def P_small():
    return PrecisionProfile(p=5, N=4, M=8, Q=24)


@pytest.fixture
def acceptance_report():
    def report(criterion, passed, description):
        line = f"CRITERION {criterion:>2}: {'PASS' if passed else 'FAIL'}  {description}"
        print(line)
        _ACCEPTANCE_LINES.append(line)

    return report


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE_LINES, key=lambda s: int(s.split(":")[0].split()[1])):
            terminalreporter.write_line(line)
