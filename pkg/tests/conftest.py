import pytest

from starpull import make_instance


@pytest.fixture(scope="session")
def inst_a():
    return make_instance("A")


@pytest.fixture(scope="session")
def inst_b():
    return make_instance("B")


@pytest.fixture(scope="session")
def inst_c():
    return make_instance("C")


@pytest.fixture(scope="session")
def inst_d():
    return make_instance("D")


@pytest.fixture(scope="session")
def inst_e():
    return make_instance("E")
