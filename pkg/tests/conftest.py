"""pytest configuration file"""

import pytest

from src.core.config import Config
from src.defs.graph import Graph


@pytest.fixture
def config() -> Config:
    return Config()


@pytest.fixture
def k2() -> Graph:
    return Graph.complete(2)


@pytest.fixture
def k3() -> Graph:
    return Graph.complete(3)


@pytest.fixture
def path3() -> Graph:
    return Graph.path(3)


@pytest.fixture
def c5() -> Graph:
    return Graph.cycle(5)
