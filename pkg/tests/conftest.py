import pytest

from polishcodes import codes as mc


@pytest.fixture(scope="session")
def Q():
    return mc.rational_line()


@pytest.fixture(scope="session")
def D2():
    return mc.geometric()


@pytest.fixture(scope="session")
def D1():
    return mc.discrete()
