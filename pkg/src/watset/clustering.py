"""Hard graph clustering: Chinese Whispers and Markov Clustering.

Both clusterers take a :class:`~watset.graph.Graph` and return a partition
of its nodes as a list of frozensets in canonical order.
"""

from __future__ import annotations

import enum
import math
import random
from collections import defaultdict
from dataclasses import dataclass
from functools import partial

import numpy as np
import scipy.sparse as sp

from .errors import EmptyInput
from .graph import Graph, N, sort_clusters


class CWMode(enum.Enum):
    TOP = "top"
    LOG = "log"
    NOLOG = "nolog"


def chinese_whispers(g: Graph[N], mode: CWMode | str = CWMode.TOP, seed: int = 0,
                     max_iterations: int = 20) -> list[frozenset[N]]:
    """Label propagation clustering.

    Every node starts in its own class. Each iteration visits the nodes in a
    seeded random order and moves each one to the class with the largest
    summed influence among its neighbours. Influence is the edge weight
    (``top``), divided by the neighbour's degree (``nolog``) or by
    ``log(1 + degree)`` (``log``). Ties go to the class of the smallest
    tied neighbour.
    """
    mode = CWMode(mode)
    if max_iterations < 1:
        raise ValueError("max_iterations must be at least 1")
    nodes = g.sorted_nodes()
    if not nodes:
        return []

    if mode is CWMode.TOP:
        scale = {node: 1.0 for node in nodes}
    elif mode is CWMode.NOLOG:
        scale = {node: 1.0 / max(g.degree(node), 1) for node in nodes}
    else:
        scale = {node: 1.0 / math.log1p(max(g.degree(node), 1)) for node in nodes}

    # neighbours in sorted order so that summation order is fixed
    influence = {node: [(nbr, w * scale[nbr]) for nbr, w in sorted(g.neighbors(node).items())]
                 for node in nodes}
    labels = {node: i for i, node in enumerate(nodes)}
    rng = random.Random(seed)
    order = list(nodes)

    for _ in range(max_iterations):
        rng.shuffle(order)
        changed = False
        for node in order:
            nbrs = influence[node]
            if not nbrs:
                continue
            scores: dict[int, float] = defaultdict(float)
            for nbr, s in nbrs:
                scores[labels[nbr]] += s
            best = max(scores.values())
            # nbrs is sorted, so the first hit is the smallest tied neighbour
            label = next(labels[nbr] for nbr, _ in nbrs if scores[labels[nbr]] == best)
            if label != labels[node]:
                labels[node] = label
                changed = True
        if not changed:
            break

    groups: dict[int, list[N]] = defaultdict(list)
    for node in nodes:
        groups[labels[node]].append(node)
    return sort_clusters(groups.values())


@dataclass(frozen=True)
class MCLParams:
    expansion: int = 2
    inflation: float = 2.0
    max_iterations: int = 20
    convergence_epsilon: float = 1e-5
    prune_below: float = 1e-5

    def __post_init__(self):
        if self.expansion < 2:
            raise ValueError("expansion must be at least 2")
        if not self.inflation > 1:
            raise ValueError("inflation must exceed 1")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")
        if not self.convergence_epsilon > 0 or not self.prune_below > 0:
            raise ValueError("convergence_epsilon and prune_below must be positive")


def _normalize_columns(m: sp.csc_array) -> sp.csc_array:
    sums = np.asarray(m.sum(axis=0)).ravel()
    sums[sums == 0] = 1.0
    return (m @ sp.diags_array(1.0 / sums)).tocsc()


def _flow_matrix(g: Graph[N], nodes: list[N]) -> sp.csc_array:
    index = {node: i for i, node in enumerate(nodes)}
    rows, cols, data = [], [], []
    for u, v, w in g.edges():
        i, j = index[u], index[v]
        rows += [i, j]
        cols += [j, i]
        data += [w, w]
    # Self-loops carry the node's heaviest incident weight (1 when isolated),
    # which equals 1 on unweighted graphs and keeps the result scale-free.
    for node, i in index.items():
        rows.append(i)
        cols.append(i)
        data.append(max(g.neighbors(node).values(), default=1.0))
    n = len(nodes)
    m = sp.csc_array((np.array(data, dtype=np.float64), (rows, cols)), shape=(n, n))
    return _normalize_columns(m)


def mcl_matrix(g: Graph[N], params: MCLParams = MCLParams()) -> tuple[list[N], sp.csc_array]:
    """Run the expansion/inflation iteration and return the final flow matrix.

    Rows and columns follow ``g.sorted_nodes()``.
    """
    nodes = g.sorted_nodes()
    m = _flow_matrix(g, nodes)
    for _ in range(params.max_iterations):
        prev = m
        expanded = m
        for _ in range(params.expansion - 1):
            expanded = expanded @ m
        m = _normalize_columns(expanded.power(params.inflation))
        m.data[m.data < params.prune_below] = 0.0
        m.eliminate_zeros()
        m = _normalize_columns(m)
        delta = abs(m - prev)
        if delta.nnz == 0 or delta.max() < params.convergence_epsilon:
            break
    return nodes, m


def markov_clustering(g: Graph[N], params: MCLParams = MCLParams()) -> list[frozenset[N]]:
    """Markov Clustering.

    Attractors are the nodes with positive diagonal flow; each attractor
    gathers the columns its row supports. Overlapping attractor groups are
    merged and any node left unattached becomes a singleton.
    """
    if not len(g):
        raise EmptyInput("cannot run MCL on an empty graph")
    nodes, m = mcl_matrix(g, params)
    n = len(nodes)

    parent = list(range(n))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    rows = m.tocsr()
    diagonal = rows.diagonal()
    for i in range(n):
        if diagonal[i] > 0:
            for j in rows.indices[rows.indptr[i]:rows.indptr[i + 1]]:
                a, b = find(i), find(int(j))
                if a != b:
                    parent[max(a, b)] = min(a, b)

    groups: dict[int, list[N]] = defaultdict(list)
    for i, node in enumerate(nodes):
        groups[find(i)].append(node)
    return sort_clusters(groups.values())


def make_clusterer(algorithm: str, mode: CWMode | str = CWMode.TOP, seed: int = 0,
                   params: MCLParams = MCLParams(), max_iterations: int = 20):
    """Return a picklable one-argument clusterer for ``"cw"`` or ``"mcl"``."""
    if algorithm == "cw":
        return partial(chinese_whispers, mode=CWMode(mode), seed=seed,
                       max_iterations=max_iterations)
    if algorithm == "mcl":
        return partial(markov_clustering, params=params)
    raise ValueError(f"unknown hard clustering algorithm {algorithm!r}")
