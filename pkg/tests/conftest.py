import logging
import os
import sys

import pytest

# Root of the repository holds config.py
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from app.enumeration.free_trees import free_trees  # noqa: E402
from config import DEFAULT_ALPHA_GRID  # noqa: E402

CONCAVE_ALPHAS = [a for a in DEFAULT_ALPHA_GRID if 0 < a < 1]
OUTER_ALPHAS = [a for a in DEFAULT_ALPHA_GRID if a < 0 or a > 1]


def trees_up_to(max_n, min_n=1):
    """(n, tree) for every free tree in the order range"""
    for n in range(min_n, max_n + 1):
        for tree in free_trees(n):
            yield n, tree


@pytest.fixture(scope='session')
def small_trees():
    return list(trees_up_to(12, min_n=2))


@pytest.fixture
def restore_root_logging():
    root = logging.getLogger()
    handlers, level = root.handlers[:], root.level
    yield
    root.handlers[:] = handlers
    root.setLevel(level)
