import pytest

from phistar.application import classify
from phistar.enumeration import enumerate_Mstar_2, enumerate_Mstar_ge3

ACCEPTANCE_RESULTS = []


@pytest.fixture(scope="session")
def mstar_1_4():
    return enumerate_Mstar_ge3(1, 4)


@pytest.fixture(scope="session")
def mstar2_table():
    return enumerate_Mstar_2(1, 4, 5000)


@pytest.fixture(scope="session")
def classification():
    return classify()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num, desc, ok, seconds in sorted(ACCEPTANCE_RESULTS):
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"{status}  criterion {num}: {desc} ({seconds:.2f}s)")
