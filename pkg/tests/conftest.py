import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))


def ginibre_state(rng: np.random.Generator, dim: int = 4) -> np.ndarray:
    """Random mixed-state matrix (Hermitian, unit trace, PSD)."""
    g = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    m = g @ g.conj().T
    return m / m.trace()


@pytest.fixture
def rng() -> np.random.Generator:
    return np.random.default_rng(20260809)
