import pytest

from symchar import build_root_system, weight_system


@pytest.fixture(scope="session")
def a1():
    return build_root_system("A", 1)


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A", 2)


@pytest.fixture(scope="session")
def b2():
    return build_root_system("B", 2)


@pytest.fixture(scope="session")
def sl2_adjoint(a1):
    return weight_system(a1, (2,))


@pytest.fixture(scope="session")
def sl3_adjoint(a2):
    return weight_system(a2, (1, 1))
