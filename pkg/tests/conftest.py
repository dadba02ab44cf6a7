import itertools
import random
from pathlib import Path

import pytest
from hypothesis import strategies as st

from watset.graph import Graph

DATA = Path(__file__).resolve().parent.parent / "src" / "watset" / "data"
FIXTURES = Path(__file__).resolve().parent / "data"


def clique(nodes, weight=1.0):
    return [(u, v, weight) for u, v in itertools.combinations(nodes, 2)]


def bridged_cliques(k=4):
    """Two k-cliques a0.. and b0.. joined by the single edge a{k-1}-b0."""
    a = [f"a{i}" for i in range(k)]
    b = [f"b{i}" for i in range(k)]
    return Graph(a + b, clique(a) + clique(b) + [(a[-1], b[0], 1.0)])


def hub_cliques(k, rng=None, hub="hub"):
    """Two k-cliques sharing one hub node; weights uniform in [0.5, 1.5] if rng given."""
    a = [f"a{i}" for i in range(k - 1)] + [hub]
    b = [f"b{i}" for i in range(k - 1)] + [hub]
    w = (lambda: round(rng.uniform(0.5, 1.5), 3)) if rng else (lambda: 1.0)
    edges = [(u, v, w()) for u, v in itertools.combinations(a, 2)]
    edges += [(u, v, w()) for u, v in itertools.combinations(b, 2)]
    return Graph(a + b[:-1], edges), frozenset(a), frozenset(b)


def random_graph(rng: random.Random, max_nodes=12, weighted=True):
    n = rng.randint(1, max_nodes)
    p = rng.uniform(0.05, 0.8)
    nodes = [f"n{i:02d}" for i in range(n)]
    edges = [(u, v, round(rng.uniform(0.1, 3.0), 3) if weighted else 1.0)
             for u, v in itertools.combinations(nodes, 2) if rng.random() < p]
    return Graph(nodes, edges)


@st.composite
def graphs(draw, max_nodes=10, min_nodes=1, weighted=True):
    n = draw(st.integers(min_nodes, max_nodes))
    nodes = [f"n{i:02d}" for i in range(n)]
    all_pairs = list(itertools.combinations(nodes, 2))
    chosen = draw(st.lists(st.sampled_from(all_pairs), unique=True)) if all_pairs else []
    if weighted:
        weights = draw(st.lists(st.floats(0.1, 5.0), min_size=len(chosen), max_size=len(chosen)))
    else:
        weights = [1.0] * len(chosen)
    return Graph(nodes, [(u, v, w) for (u, v), w in zip(chosen, weights)])


def is_partition(clusters, nodes):
    seen = set()
    for c in clusters:
        if not c or seen & c:
            return False
        seen |= c
    return seen == set(nodes)


@pytest.fixture
def toy_paths():
    return DATA / "toy_pairs.tsv", DATA / "toy_vectors.txt", DATA / "toy_gold.tsv"


# Acceptance results, printed once at the end of the session.
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, passed, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(
            f"[{'PASS' if passed else 'FAIL'}] {number:2d}. {name}: {detail}")
