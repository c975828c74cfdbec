import sys
import pytest

from qhopf import hopf, mhc
from qhopf.quasigroup import chein_double, cyclic_group, symmetric_group


@pytest.fixture(scope="session")
def m12():
    return chein_double(symmetric_group(3))


@pytest.fixture(scope="session")
def s3():
    return symmetric_group(3)


@pytest.fixture(scope="session")
def c2():
    return cyclic_group(2)


@pytest.fixture(scope="session")
def k_m12(m12):
    return mhc.function_algebra(m12)


@pytest.fixture(scope="session")
def kG_m12(m12):
    return hopf.group_algebra(m12)



def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n][1])
