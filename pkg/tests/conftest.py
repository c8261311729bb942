import pytest

from partition_records import build_tables


@pytest.fixture(scope="session")
def tables():
    """One shared exact table: Bell numbers through 1003 (needed by the
    shift-expansion checks at n = 1000), Stirling rows through 30."""
    return build_tables(1003, stirling_max_n=30)
