"""
🧪 Fixtures partagées RootBounds
"""

import sys
from dataclasses import dataclass
from pathlib import Path
from typing import List

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from config import DATA_DIR  # noqa: E402
from corpus_generator import PolynomialGenerator  # noqa: E402
from poly_core import Polynomial  # noqa: E402
from root_oracle import CriticalPoint, RootSet, critical_points, find_roots  # noqa: E402

CORPUS_SEED = 20240611
CORPUS_SIZE = 1000


@dataclass
class CorpusEntry:
    polynomial: Polynomial
    roots: RootSet
    critical: List[CriticalPoint]


@pytest.fixture
def generator():
    return PolynomialGenerator(seed=7)


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture(scope="session")
def random_corpus() -> List[CorpusEntry]:
    """1000 polynômes unitaires, degrés 3..12, coefficients dans le disque unité"""
    corpus = PolynomialGenerator(seed=CORPUS_SEED).generate_corpus(CORPUS_SIZE, 3, 12)
    return [CorpusEntry(p, find_roots(p), critical_points(p)) for p in corpus]
