import random

import pytest

from bierlab.complexes import Complex


def random_complex(rng: random.Random, m: int | None = None) -> Complex:
    """Random facet antichain on a small ground set (ghosts possible)."""
    if m is None:
        m = rng.randint(1, 6)
    n_gens = rng.randint(0, 6)
    gens = [rng.randint(0, (1 << m) - 1) for _ in range(n_gens)]
    return Complex.from_masks(m, gens)


@pytest.fixture
def rng():
    return random.Random(20240811)
