import pytest

from heckelab.rankin import rankin_pipeline


@pytest.fixture(scope="session")
def genus1():
    return rankin_pipeline(1)


@pytest.fixture(scope="session")
def genus2():
    # exact decomposition plus both reconstructions, a few seconds
    return rankin_pipeline(2)
