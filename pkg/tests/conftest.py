from mpmath import mp, mpf
import pytest


@pytest.fixture
def dps50():
    with mp.workdps(50):
        yield


def tol(digits: int) -> mpf:
    with mp.workdps(30):
        return mpf(10) ** (-digits)
