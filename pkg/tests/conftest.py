import pytest

from cycloden import Config, make_field


@pytest.fixture(scope="session")
def cfg():
    return Config(seed=0)


@pytest.fixture(scope="session")
def Q():
    return make_field(1)


@pytest.fixture(scope="session")
def Q8():
    return make_field(8)


@pytest.fixture(scope="session")
def Q4():
    return make_field(4)


@pytest.fixture(scope="session")
def Q3():
    return make_field(3)
