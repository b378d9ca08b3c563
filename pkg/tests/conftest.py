import os
import random

import pytest

from trapgraph import IntersectionGraph
from trapgraph.cli import read_diagram_file

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURE_DIR, name)


def load_fixture(name):
    return read_diagram_file(fixture_path(name))


# small named diagrams used across modules (corner lists are 0-based input)
P3_CORNERS = dict(a=[1, 2, 4], b=[3, 5, 6], c=[1, 2, 4], d=[3, 5, 6])
K3_CORNERS = dict(a=[1, 2, 3], b=[4, 5, 6], c=[1, 2, 3], d=[4, 5, 6])
DISJOINT_PAIR = dict(a=[1, 3], b=[2, 4], c=[1, 3], d=[2, 4])


def random_graph(n, p, rng: random.Random) -> IntersectionGraph:
    edges = [
        (u, v)
        for u in range(1, n + 1)
        for v in range(u + 1, n + 1)
        if rng.random() < p
    ]
    return IntersectionGraph.from_edges(n, edges)


@pytest.fixture(scope="session")
def canonical_n8():
    return load_fixture("n8_kappa2.txt")
