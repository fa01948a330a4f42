import pytest

from nildga import build_kodaira, complex_dga, symplectic_dga, SymplecticSpec

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture(scope="session")
def surface():
    return complex_dga(build_kodaira(1))


@pytest.fixture(scope="session")
def kodaira3():
    return complex_dga(build_kodaira(2))


@pytest.fixture(scope="session")
def symp():
    return symplectic_dga(SymplecticSpec(1, 0, 0, 0))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
