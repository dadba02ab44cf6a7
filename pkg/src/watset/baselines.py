"""Fuzzy clustering baselines: MaxMax, ECO and Clique Percolation."""

from __future__ import annotations

import itertools
from collections import Counter, defaultdict
from dataclasses import dataclass

import numpy as np

from .clustering import MCLParams, markov_clustering
from .errors import EmptyInput
from .graph import EPSILON, Graph, N, connected_components, sort_clusters


def _require_nodes(g: Graph) -> None:
    if not len(g):
        raise EmptyInput("cannot cluster an empty graph")


def maximal_affinity(g: Graph[N]) -> dict[N, list[N]]:
    """Map each node to its heaviest neighbours (all of them on a tie)."""
    best = {}
    for node in g.sorted_nodes():
        nbrs = g.neighbors(node)
        if nbrs:
            top = max(nbrs.values())
            best[node] = sorted(v for v, w in nbrs.items() if w == top)
        else:
            best[node] = []
    return best


def maxmax(g: Graph[N]) -> list[frozenset[N]]:
    """MaxMax clustering.

    Each node ``v`` receives an arc from every maximal-affinity neighbour
    ``u`` (``u -> v``). Nodes are visited in sorted order; a node still
    marked as root demotes all of its transitive descendants. Every
    surviving root then yields one cluster: itself plus its descendants.
    """
    _require_nodes(g)
    children: dict[N, list[N]] = defaultdict(list)
    for v, parents in maximal_affinity(g).items():
        for u in parents:
            children[u].append(v)

    def descendants(root: N) -> set[N]:
        seen = set()
        stack = [root]
        while stack:
            for child in children[stack.pop()]:
                if child not in seen:
                    seen.add(child)
                    stack.append(child)
        seen.discard(root)
        return seen

    root = {node: True for node in g.sorted_nodes()}
    reach = {}
    for node in g.sorted_nodes():
        if root[node]:
            reach[node] = descendants(node)
            for child in reach[node]:
                root[child] = False
    return sort_clusters({node} | reach[node] for node, is_root in root.items() if is_root)


@dataclass(frozen=True)
class EcoParams:
    runs: int = 100
    noise_magnitude: float = 0.05
    threshold: float = 0.5
    seed: int = 0
    mcl: MCLParams = MCLParams()

    def __post_init__(self):
        if self.runs < 1:
            raise ValueError("runs must be positive")
        if not self.noise_magnitude > 0:
            raise ValueError("noise_magnitude must be positive")


def _perturbed(g: Graph[N], rng: np.random.Generator, magnitude: float) -> Graph[N]:
    edges = sorted(g.edges())
    noise = rng.uniform(-magnitude, magnitude, size=len(edges))
    return Graph(g.sorted_nodes(),
                 ((u, v, max(w + d, EPSILON)) for (u, v, w), d in zip(edges, noise)))


def eco_probabilities(g: Graph[N], params: EcoParams = EcoParams()) -> dict[tuple[N, N], float]:
    """Fraction of noisy MCL runs that put each pair ``(u, v)``, ``u < v``, together.

    Run ``i`` draws its noise from a generator seeded with ``seed + i``.
    Pairs that never meet are left out.
    """
    _require_nodes(g)
    together: Counter[tuple[N, N]] = Counter()
    for run in range(params.runs):
        rng = np.random.default_rng(params.seed + run)
        for cluster in markov_clustering(_perturbed(g, rng, params.noise_magnitude), params.mcl):
            together.update(itertools.combinations(sorted(cluster), 2))
    return {pair: count / params.runs for pair, count in together.items()}


def eco(g: Graph[N], params: EcoParams = EcoParams()) -> list[frozenset[N]]:
    """ECO clustering: connected components of the frequently co-clustered pairs.

    A pair is kept when its co-clustering probability reaches the threshold.
    Words without a kept pair come out as singletons.
    """
    probs = eco_probabilities(g, params)
    kept = ((u, v, p) for (u, v), p in sorted(probs.items()) if p >= params.threshold)
    return connected_components(Graph(g.sorted_nodes(), kept))


def find_cliques(g: Graph[N]) -> list[frozenset[N]]:
    """All maximal cliques via Bron-Kerbosch with Tomita pivoting."""
    adj = {node: set(g.neighbors(node)) for node in g}
    cliques = []
    # explicit stack of (R, P, X) keeps deep graphs off the recursion limit
    stack = [(frozenset(), set(adj), set())]
    while stack:
        r, p, x = stack.pop()
        if not p:
            if not x:
                cliques.append(r)
            continue
        pivot = max(p | x, key=lambda u: (len(p & adj[u]), u))
        for v in sorted(p - adj[pivot]):
            stack.append((r | {v}, p & adj[v], x & adj[v]))
            p = p - {v}
            x = x | {v}
    return sort_clusters(cliques)


@dataclass(frozen=True)
class CpmParams:
    k: int = 2

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("k must be at least 2")


def clique_percolation(g: Graph[N], params: CpmParams = CpmParams()) -> list[frozenset[N]]:
    """Clique percolation communities; edge weights are ignored.

    Two k-cliques are adjacent when they share k-1 nodes. Every k-clique lies
    in a maximal clique of size >= k, and two such maximal cliques sharing
    k-1 nodes contain adjacent k-cliques, so percolating over maximal cliques
    gives the same communities. Nodes outside every k-clique are left out.
    """
    _require_nodes(g)
    k = params.k
    cliques = [c for c in find_cliques(g) if len(c) >= k]

    parent = list(range(len(cliques)))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    by_node: dict[N, list[int]] = defaultdict(list)
    for i, clique in enumerate(cliques):
        for node in clique:
            by_node[node].append(i)
    for members in by_node.values():
        for a, b in itertools.combinations(members, 2):
            if find(a) != find(b) and len(cliques[a] & cliques[b]) >= k - 1:
                parent[max(find(a), find(b))] = min(find(a), find(b))

    communities: dict[int, set[N]] = defaultdict(set)
    for i, clique in enumerate(cliques):
        communities[find(i)] |= clique
    return sort_clusters(communities.values())


def pad_singletons(g: Graph[N], clusters: list[frozenset[N]]) -> list[frozenset[N]]:
    """Add a singleton for every node of ``g`` not covered by ``clusters``."""
    covered = set().union(*clusters) if clusters else set()
    return sort_clusters(list(clusters) + [{n} for n in g.sorted_nodes() if n not in covered])
