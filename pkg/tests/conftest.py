import os
import random

import pytest

from atomkit.oracles import random_minimal_dfa

SEED = int(os.environ.get("ATOMKIT_SEED", "20120815"))


def pytest_report_header(config):
    return f"ATOMKIT_SEED={SEED}"


def random_suite(count=50, max_n=5, seed=SEED):
    """Seeded minimal DFAs with 1..max_n states over two or three letters."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = 1 + i % max_n
        alphabet = ("a", "b") if i % 2 == 0 else ("a", "b", "c")
        out.append(random_minimal_dfa(n, alphabet, rng))
    return out


@pytest.fixture(scope="session")
def random_dfas():
    return random_suite()
