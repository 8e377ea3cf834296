import numpy as np
import pytest

from gha.core import HouseValues, Instance
from gha.families import random_connected_graph, random_tree


def random_instance(rng, n, value_max=100, extra_edge_prob=0.35) -> Instance:
    graph = random_connected_graph(n, extra_edge_prob, rng)
    values = sorted(int(x) for x in rng.integers(0, value_max + 1, size=n))
    return Instance.create(graph, HouseValues.from_iterable(values))


def random_tree_instance(rng, n, value_max=100) -> Instance:
    tree = random_tree(n, rng)
    values = sorted(int(x) for x in rng.integers(0, value_max + 1, size=n))
    return Instance.create(tree, HouseValues.from_iterable(values))


@pytest.fixture
def rng():
    return np.random.default_rng(12345)
