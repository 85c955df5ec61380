"""
Shared fixtures: the bundled sample documents and the sets they describe.
"""

from pathlib import Path

import pytest

from models.word import Word
from services.word_service import make_tangency_set

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

GENUS2_WORDS = [(1, 2, 1, 2, 2), (-1, -2, -2), (-1, -2)]
GENUS2_MINIMAL = [(1, 2), (-1,), (-2,)]


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture
def genus2_set():
    """Three-curve genus-2 block; reduces 10 -> 6 -> 4."""
    return make_tangency_set(2, [Word(w) for w in GENUS2_WORDS])


@pytest.fixture
def genus2_minimal():
    return make_tangency_set(2, [Word(w) for w in GENUS2_MINIMAL])


@pytest.fixture
def torus_four_parallel():
    return make_tangency_set(1, [(1,), (1,), (-1,), (-1,)])
