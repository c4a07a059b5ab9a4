import pytest

from cobcalc import Context


@pytest.fixture(scope="session")
def ctx8() -> Context:
    return Context(8)


@pytest.fixture(scope="session")
def ctx4() -> Context:
    return Context(4)
