"""Undirected weighted graphs and synonymy graph construction."""

from __future__ import annotations

import enum
import logging
from collections import Counter, deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import (IO, TYPE_CHECKING, Generic, Hashable, Iterable, Iterator,
                    Mapping, Sequence, TypeVar)

from .errors import EmptyInput, FormatError, MissingEmbeddings, UnknownWord

if TYPE_CHECKING:
    from .embeddings import VectorStore

log = logging.getLogger(__name__)

N = TypeVar("N", bound=Hashable)

# Weight given to SIM edges whose cosine is missing or non-positive.
EPSILON = 1e-6


class Graph(Generic[N]):
    """Immutable undirected graph with positive edge weights.

    Nodes must be hashable and mutually orderable; clusterers rely on the
    ordering for deterministic tie-breaking.
    """

    __slots__ = ("_adj",)

    def __init__(self, nodes: Iterable[N] = (),
                 edges: Iterable[tuple[N, N, float]] = ()):
        adj: dict[N, dict[N, float]] = {node: {} for node in nodes}
        for u, v, w in edges:
            if u == v:
                raise ValueError(f"self-loop on {u!r}")
            w = float(w)
            if not w > 0:
                raise ValueError(f"non-positive weight {w} on ({u!r}, {v!r})")
            adj.setdefault(u, {})[v] = w
            adj.setdefault(v, {})[u] = w
        self._adj = adj

    def __contains__(self, node) -> bool:
        return node in self._adj

    def __len__(self) -> int:
        return len(self._adj)

    def __iter__(self) -> Iterator[N]:
        return iter(self._adj)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self._adj == other._adj

    def __repr__(self) -> str:
        return f"Graph(nodes={len(self)}, edges={self.number_of_edges()})"

    @property
    def nodes(self) -> frozenset[N]:
        return frozenset(self._adj)

    def sorted_nodes(self) -> list[N]:
        return sorted(self._adj)

    def neighbors(self, node: N) -> Mapping[N, float]:
        try:
            return MappingProxyType(self._adj[node])
        except KeyError:
            raise UnknownWord(node) from None

    def degree(self, node: N) -> int:
        return len(self.neighbors(node))

    def weight(self, u: N, v: N) -> float | None:
        return self._adj.get(u, {}).get(v)

    def has_edge(self, u: N, v: N) -> bool:
        return v in self._adj.get(u, ())

    def edges(self) -> Iterator[tuple[N, N, float]]:
        """Yield every edge once as ``(u, v, weight)`` with ``u < v``."""
        for u, nbrs in self._adj.items():
            for v, w in nbrs.items():
                if u < v:
                    yield u, v, w

    def number_of_edges(self) -> int:
        return sum(len(nbrs) for nbrs in self._adj.values()) // 2

    def subgraph(self, nodes: Iterable[N]) -> Graph[N]:
        keep = set(nodes)
        missing = keep - self._adj.keys()
        if missing:
            raise UnknownWord(min(missing))
        return Graph(keep, ((u, v, w) for u, v, w in self.edges()
                            if u in keep and v in keep))

    def scaled(self, factor: float) -> Graph[N]:
        return Graph(self._adj, ((u, v, w * factor) for u, v, w in self.edges()))

    def relabel(self, mapping: Mapping[N, Hashable]) -> Graph:
        return Graph((mapping[n] for n in self._adj),
                     ((mapping[u], mapping[v], w) for u, v, w in self.edges()))


WordGraph = Graph[str]


class Weighting(enum.Enum):
    ONES = "ones"
    COUNT = "count"
    SIM = "sim"


@dataclass(frozen=True)
class EgoNetwork(Generic[N]):
    ego: N
    graph: Graph[N]


def build_graph(pairs: Iterable[Sequence], weighting: Weighting | str = Weighting.ONES,
                vectors: VectorStore | None = None) -> WordGraph:
    """Build a synonymy graph from word pairs.

    Each pair is ``(u, v)`` or ``(u, v, weight)``. A supplied weight overrides
    the weighting scheme for that pair; repeated supplied weights keep the
    maximum. Self-pairs contribute their word as a node but no edge.
    """
    weighting = Weighting(weighting)
    pairs = list(pairs)
    if not pairs:
        raise EmptyInput("no synonymy pairs given")
    if weighting is Weighting.SIM and vectors is None:
        raise MissingEmbeddings("the sim weighting needs a vector store")

    nodes: set[str] = set()
    counts: Counter[tuple[str, str]] = Counter()
    explicit: dict[tuple[str, str], float] = {}
    for pair in pairs:
        if len(pair) not in (2, 3):
            raise FormatError(f"expected 2 or 3 fields, got {pair!r}")
        u, v = pair[0], pair[1]
        nodes.add(u)
        nodes.add(v)
        if u == v:
            continue
        key = (u, v) if u < v else (v, u)
        if len(pair) == 3:
            w = float(pair[2])
            if not w > 0:
                raise FormatError(f"non-positive weight in {pair!r}")
            explicit[key] = max(w, explicit.get(key, 0.0))
        else:
            counts[key] += 1

    def scheme_weight(key: tuple[str, str]) -> float:
        if weighting is Weighting.ONES:
            return 1.0
        if weighting is Weighting.COUNT:
            return float(counts[key])
        sim = vectors.cosine(*key)
        if sim is None or sim <= 0:
            return EPSILON
        return sim

    edges = []
    for key in sorted(counts.keys() | explicit.keys()):
        w = explicit[key] if key in explicit else scheme_weight(key)
        edges.append((key[0], key[1], w))
    return Graph(sorted(nodes), edges)


def ego_network(g: Graph[N], u: N) -> EgoNetwork[N]:
    """Neighbours of ``u`` and the edges among them, ``u`` itself removed."""
    if u not in g:
        raise UnknownWord(u)
    return EgoNetwork(u, g.subgraph(g.neighbors(u)))


def connected_components(g: Graph[N]) -> list[frozenset[N]]:
    seen: set[N] = set()
    components = []
    for start in g.sorted_nodes():
        if start in seen:
            continue
        seen.add(start)
        component = [start]
        queue = deque([start])
        while queue:
            for nbr in g.neighbors(queue.popleft()):
                if nbr not in seen:
                    seen.add(nbr)
                    component.append(nbr)
                    queue.append(nbr)
        components.append(frozenset(component))
    return components


def sort_clusters(clusters: Iterable[Iterable[N]]) -> list[frozenset[N]]:
    """Canonical cluster order: larger first, then by sorted members."""
    clusters = [frozenset(c) for c in clusters]
    return sorted(clusters, key=lambda c: (-len(c), sorted(c)))


def read_pairs(stream: IO[str]) -> list[tuple]:
    """Parse ``word1<TAB>word2[<TAB>weight]`` lines; ``#`` lines are comments."""
    pairs = []
    for lineno, line in enumerate(stream, 1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        fields = line.split("\t")
        if len(fields) == 2:
            pairs.append((fields[0], fields[1]))
        elif len(fields) == 3:
            try:
                w = float(fields[2])
            except ValueError:
                raise FormatError(f"line {lineno}: bad weight {fields[2]!r}") from None
            pairs.append((fields[0], fields[1], w))
        else:
            raise FormatError(f"line {lineno}: expected 2 or 3 tab-separated fields")
    return pairs


def write_graph(g: WordGraph, stream: IO[str]) -> None:
    """Write edges as weighted pairs; isolated words as self-pairs."""
    for u, v, w in sorted(g.edges()):
        stream.write(f"{u}\t{v}\t{w!r}\n")
    for node in g.sorted_nodes():
        if not g.degree(node):
            stream.write(f"{node}\t{node}\n")
