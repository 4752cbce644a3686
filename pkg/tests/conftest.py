import pytest

from gcdperm import generate_prefix, record_values

MILLION = 1_000_000


@pytest.fixture(scope="session")
def f3_million():
    """One shared million-term f_3 prefix for the heavy checks."""
    return generate_prefix(3, MILLION)


@pytest.fixture(scope="session")
def records_million():
    """All f_3 record values up to one million (plus a little headroom)."""
    return record_values(MILLION + 1000)
