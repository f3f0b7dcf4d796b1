import pytest

from cliqueops import UnitaryMagma, magma_product


@pytest.fixture(scope="session")
def z():
    return UnitaryMagma.integers()


@pytest.fixture(scope="session")
def d0():
    return UnitaryMagma.zero_product(0)


@pytest.fixture(scope="session")
def d1():
    return UnitaryMagma.zero_product(1)


@pytest.fixture(scope="session")
def d2():
    return UnitaryMagma.zero_product(2)


@pytest.fixture(scope="session")
def e1():
    return UnitaryMagma.unit_product(1)


@pytest.fixture(scope="session")
def e2():
    return UnitaryMagma.unit_product(2)


@pytest.fixture(scope="session")
def n2():
    return UnitaryMagma.cyclic(2)


@pytest.fixture(scope="session")
def n3():
    return UnitaryMagma.cyclic(3)


@pytest.fixture(scope="session")
def d0sq():
    m = UnitaryMagma.zero_product(0)
    return magma_product(m, m)
