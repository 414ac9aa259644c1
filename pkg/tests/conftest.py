from fractions import Fraction

import pytest

# rational points that avoid every harmonic and binomial pole used in the tests
X_TEST = tuple(Fraction(v) for v in ("0", "1", "2", "7", "1/2", "5/2", "-1/3", "22/7"))


@pytest.fixture
def x_test():
    return X_TEST


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
