import random

import pytest

from sdncg import HostGraph, random_connected_host


@pytest.fixture
def rng():
    return random.Random(20260810)


def small_hosts(count=8, n_max=7, seed=1234):
    """A deterministic batch of small random connected hosts."""
    r = random.Random(seed)
    return [random_connected_host(r.randint(3, n_max), r.uniform(0.2, 0.7), r) for _ in range(count)]


@pytest.fixture
def hosts():
    return small_hosts()


@pytest.fixture
def k26():
    # complete bipartite host where the greedy seed is not yet swap-maximal
    return HostGraph(8, [(a, b) for a in (0, 1) for b in range(2, 8)])
