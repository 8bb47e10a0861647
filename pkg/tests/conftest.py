import pytest

from rdelamb import pinned_constants


@pytest.fixture(scope="session")
def c():
    return pinned_constants()
