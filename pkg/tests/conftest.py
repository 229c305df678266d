import pytest

from xrmatrix import ExactField, NumericField, sample_params


@pytest.fixture(scope="session")
def ps():
    return sample_params(7)


@pytest.fixture(scope="session")
def nf(ps):
    return NumericField(ps.q)


@pytest.fixture(scope="session")
def ef():
    return ExactField()
