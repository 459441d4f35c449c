import sys

import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def approx60():
    """Compare two mpf values to 10^-40 (the default tolerance at 60 digits)."""
    import mpmath

    def check(a, b, tol=mpmath.mpf("1e-40")):
        with mpmath.workdps(80):
            return abs(mpmath.mpf(a) - mpmath.mpf(b)) <= tol
    return check


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    lines = getattr(mod, "LINES", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
