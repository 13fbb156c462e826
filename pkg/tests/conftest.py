import random
from itertools import combinations

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from specbound.graphs import Graph

settings.register_profile(
    "suite",
    max_examples=60,
    derandomize=True,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("suite")


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = tuple(
        (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p
    )
    return Graph(n, edges)


def seeded_graphs(seed: int, count: int, max_n: int,
                  ps=(0.2, 0.35, 0.5, 0.7)) -> list[Graph]:
    rng = random.Random(seed)
    return [
        random_graph(rng, rng.randint(1, max_n), rng.choice(ps))
        for _ in range(count)
    ]


@st.composite
def graphs_st(draw, min_n: int = 1, max_n: int = 9):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    flags = draw(st.lists(st.booleans(), min_size=len(pairs),
                          max_size=len(pairs)))
    return Graph(n, tuple(p for p, f in zip(pairs, flags) if f))


@pytest.fixture
def rng():
    return random.Random(20240817)
