import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from posetoperad.catalog import iso_classes


@pytest.fixture(scope="session")
def classes_upto_4():
    return {n: iso_classes(n) for n in range(5)}


@pytest.fixture(scope="session")
def classes_upto_5():
    return {n: iso_classes(n) for n in range(6)}


@pytest.fixture(scope="session")
def classes_upto_6():
    return {n: iso_classes(n) for n in range(7)}
