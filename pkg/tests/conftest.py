import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))  # for the oracles module

from gf2perfect import perfect


@pytest.fixture(scope='session')
def catalog_certs():
    return perfect.catalog()


@pytest.fixture(scope='session')
def exhaustive20():
    return perfect.exhaustive_search(20)


@pytest.fixture(scope='session')
def shape40():
    return perfect.shape_search(40, 8, use_pruning=True)


@pytest.fixture(scope='session')
def shape24_pruned():
    return perfect.shape_search(24, 6, use_pruning=True)


@pytest.fixture(scope='session')
def shape24_unpruned():
    return perfect.shape_search(24, 6, use_pruning=False)
