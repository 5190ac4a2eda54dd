import pytest

from recap.registry import default_registry


@pytest.fixture(scope="session")
def registry():
    return default_registry()


@pytest.fixture(scope="session")
def priorities(registry):
    return registry.priorities
