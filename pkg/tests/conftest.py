import logging
import random
import sys
from pathlib import Path

import pytest
import structlog

DATA_DIR = Path(__file__).parent / "data"


def pytest_configure(config):
    # stdout belongs to CLI output, keep log lines out of it
    structlog.configure(
        processors=[
            structlog.processors.add_log_level,
            structlog.dev.ConsoleRenderer(colors=False),
        ],
        wrapper_class=structlog.make_filtering_bound_logger(logging.INFO),
        logger_factory=structlog.PrintLoggerFactory(file=sys.stderr),
        cache_logger_on_first_use=False,
    )


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20241018)
