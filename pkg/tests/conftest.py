"""Pytest configuration and fixtures."""

import logging

import numpy as np
import pytest

from src.config import BlocksConfig, set_config
from src.models.base import Context, Partition


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: exhaustive suites over whole label sets")


@pytest.fixture(autouse=True)
def fresh_config():
    """Default configuration for every test; package logger restored afterwards."""
    set_config(BlocksConfig())
    yield
    set_config(BlocksConfig())
    logger = logging.getLogger("src")
    for handler in list(logger.handlers):
        logger.removeHandler(handler)
        handler.close()
    logger.setLevel(logging.NOTSET)
    logger.propagate = True


@pytest.fixture
def rng():
    """Seeded generator so randomized properties are reproducible."""
    return np.random.default_rng(20240611)


@pytest.fixture
def worked_pair():
    """A balanced pair mu inside lambda with delta = 2."""
    return Partition((8, 8, 8, 7, 3, 3, 2)), Partition((6, 5, 1, 1)), Context(7, 2)


@pytest.fixture
def abacus_context():
    """p = 5, delta = 2, n = 16: the bead count is 20."""
    return Context(16, 2, 5)
