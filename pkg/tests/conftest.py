import pytest

from convlab.algebra import Carrier


@pytest.fixture(scope="session")
def p1():
    return Carrier(1)


@pytest.fixture(scope="session")
def p2():
    return Carrier(2)


@pytest.fixture(scope="session")
def p3():
    return Carrier(3)


@pytest.fixture(scope="session")
def p4():
    return Carrier(4)
