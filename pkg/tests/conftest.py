import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from hyperforge import factory  # noqa: E402

GOLDEN = Path(__file__).parent / "golden"


@pytest.fixture(scope="session")
def corpus():
    return factory.corpus()


@pytest.fixture(scope="session")
def small_corpus(corpus):
    return [(name, S) for name, S in corpus if S.k <= 4]


@pytest.fixture(scope="session")
def golden_dir():
    return GOLDEN
