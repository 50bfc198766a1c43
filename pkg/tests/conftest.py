import pytest

from qmalcev import catalog_get


@pytest.fixture(scope="session")
def sl2():
    return catalog_get("sl2").algebra


@pytest.fixture(scope="session")
def m7():
    return catalog_get("m7").algebra


@pytest.fixture(scope="session")
def osp12():
    return catalog_get("osp12").algebra


@pytest.fixture(scope="session")
def k21():
    """The (1|6) extension of the n=2 example family with m = (1, 2)."""
    return catalog_get("example_gde", n=2, m=(1, 2)).algebra


@pytest.fixture(scope="session")
def m2():
    """The (1|4) base family member with n = 2, m = (1, 2)."""
    return catalog_get("example_M", n=2, m=(1, 2))
