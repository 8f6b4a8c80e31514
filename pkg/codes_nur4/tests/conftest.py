import random

import pytest

from scripts.genmat import Code


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def full_ring_code():
    """{0, a, b, c} at n = 1."""
    return Code.from_words(["0", "a", "b", "c"])


@pytest.fixture
def diagonal_code():
    """{00, aa, bb, cc}, the unique optimal code of type {1,0} at n = 2."""
    return Code.from_words(["00", "aa", "bb", "cc"])


@pytest.fixture
def torsion_pair_code():
    """{00, cc}, the unique optimal code of type {0,1} at n = 2."""
    return Code.from_words(["00", "cc"])
