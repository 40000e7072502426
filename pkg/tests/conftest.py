import pytest
from hypothesis import settings

from symeichler import make_lattice

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


@pytest.fixture
def L112():
    return make_lattice((1, 1, 2))


@pytest.fixture
def L114():
    return make_lattice((1, 1, 4))


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for r in sorted(test_acceptance.RESULTS, key=lambda r: r.number):
            terminalreporter.write_line(r.line())
