import pytest

from mdscosets.verify import DeskCache


@pytest.fixture(scope="session")
def desk():
    """Shared corpus with memoized censuses; built once per test session."""
    return DeskCache()
