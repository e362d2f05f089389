"""Shared pytest configuration and fixtures."""

import numpy as np
import pytest

from graph_core import make_graph
from observability.logger import configure_logging

# Ensure pytest-asyncio runs in auto mode for all tests
pytest_plugins = ("pytest_asyncio",)


def pytest_addoption(parser):
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="run opt-in heavy tests (order-8 enumeration)",
    )


def pytest_collection_modifyitems(config, items):
    if config.getoption("--run-slow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --run-slow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture(autouse=True)
def quiet_logging():
    """Route library logs to stderr at WARNING for every test."""
    configure_logging("WARNING", json_logs=True)


@pytest.fixture
def rng():
    """Seeded generator so randomized tests are reproducible."""
    return np.random.default_rng(20240601)


@pytest.fixture
def paw():
    """Triangle 0-1-2 with pendant vertex 3 on vertex 0."""
    return make_graph(4, [(0, 1), (1, 2), (0, 2), (0, 3)])


@pytest.fixture
def diamond():
    """K_4 minus the edge 2-3."""
    return make_graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])


@pytest.fixture(scope="session")
def anyio_backend():
    """Configure anyio backend."""
    return "asyncio"
