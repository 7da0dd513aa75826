import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from posetkit import build_poset  # noqa: E402
from posetkit.gen import GenSpec, generate  # noqa: E402

PROBS = (Fraction(1, 10), Fraction(3, 10), Fraction(6, 10))


def random_corpus(count_per_p=334, max_n=12):
    """Seeded random DAG posets, n in 2..max_n, cycling over the three edge probabilities."""
    for seed in range(count_per_p):
        for p in PROBS:
            n = 2 + seed % (max_n - 1)
            yield generate(GenSpec("random_dag", n, seed, p))


@pytest.fixture
def div6():
    return build_poset(["1", "2", "3", "6"], [("1", "2"), ("1", "3"), ("2", "6"), ("3", "6")])


@pytest.fixture
def vee():
    # a <= c, b <= c
    return build_poset(["a", "b", "c"], [("a", "c"), ("b", "c")])


@pytest.fixture
def wedge():
    # c <= a, c <= b
    return build_poset(["a", "b", "c"], [("c", "a"), ("c", "b")])
