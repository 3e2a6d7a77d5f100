import pytest

from gfharmonic import make_context, make_group


@pytest.fixture(scope="session")
def gf4():
    return make_context(2, 1)


@pytest.fixture(scope="session")
def gf16():
    return make_context(2, 2)


@pytest.fixture(scope="session")
def gf9():
    return make_context(3, 1)


@pytest.fixture(scope="session")
def z3(gf4):
    return make_group(gf4, [(3, 1)])


@pytest.fixture(scope="session")
def z3sq(gf4):
    return make_group(gf4, [(3, 2)])


@pytest.fixture(scope="session")
def z5(gf16):
    return make_group(gf16, [(5, 1)])


@pytest.fixture(scope="session")
def z5sq(gf16):
    return make_group(gf16, [(5, 2)])


@pytest.fixture(scope="session")
def z4(gf9):
    return make_group(gf9, [(4, 1)])


@pytest.fixture(scope="session")
def z2z4(gf9):
    return make_group(gf9, [(2, 1), (4, 1)])
