"""Local-global fuzzy graph clustering.

Words are split into senses by clustering their ego networks (local step),
the neighbours of each sense are mapped to their best-matching senses, and
the resulting sense graph is partitioned by a hard clusterer (global step).
Dropping sense indices from the global clusters gives overlapping clusters
of words.
"""

from __future__ import annotations

import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, NamedTuple

from .errors import EmptyInput, InconsistentInventory, UnknownWord
from .graph import Graph, WordGraph, ego_network, sort_clusters

log = logging.getLogger(__name__)

Clusterer = Callable[[Graph], list]


class SenseId(NamedTuple):
    word: str
    index: int

    def __str__(self) -> str:
        return f"{self.word}#{self.index}"


SenseGraph = Graph[SenseId]


@dataclass
class SenseInventory:
    senses: dict[str, list[SenseId]] = field(default_factory=dict)
    contexts: dict[SenseId, dict[str, float]] = field(default_factory=dict)

    def __contains__(self, sense) -> bool:
        return sense in self.contexts

    def __len__(self) -> int:
        return len(self.contexts)

    def add(self, word: str, senses: Iterable[tuple[SenseId, dict[str, float]]]) -> None:
        self.senses[word] = []
        for sense, ctx in senses:
            self.senses[word].append(sense)
            self.contexts[sense] = ctx

    def all_senses(self) -> list[SenseId]:
        return sorted(self.contexts)


def induce_senses(g: WordGraph, u: str, local: Clusterer) -> list[tuple[SenseId, dict[str, float]]]:
    """Cluster the ego network of ``u``; each cluster becomes one sense.

    Context members are weighted by their edge weight to ``u``. A word with
    no neighbours gets a single sense with an empty context.
    """
    if u not in g:
        raise UnknownWord(u)
    ego = ego_network(g, u).graph
    if not len(ego):
        return [(SenseId(u, 0), {})]
    clusters = sort_clusters(local(ego))
    weights = g.neighbors(u)
    return [(SenseId(u, i), {w: weights[w] for w in sorted(cluster)})
            for i, cluster in enumerate(clusters)]


def _similarity(target: Mapping, norm: float, ctx: Mapping) -> float:
    if not ctx or norm == 0:
        return 0.0
    small, large = (ctx, target) if len(ctx) <= len(target) else (target, ctx)
    dot = math.fsum(w * large[k] for k, w in small.items() if k in large)
    if dot == 0:
        return 0.0
    return dot / (norm * math.sqrt(math.fsum(w * w for w in ctx.values())))


def disambiguate_context(inv: SenseInventory, s: SenseId) -> dict[SenseId, float]:
    """Replace every word of ``ctx(s)`` with its sense closest to ``ctx(s)``.

    Contexts are compared as sparse weighted vectors by cosine. Before the
    comparison ``ctx(s)`` is extended with the word of ``s`` at its largest
    weight, so candidate senses that list that word score higher. Ties go to
    the lowest sense index.
    """
    if s not in inv:
        raise InconsistentInventory(f"unknown sense {s}")
    ctx = inv.contexts[s]
    if not ctx:
        return {}
    target = dict(ctx)
    target[s.word] = max(ctx.values())
    norm = math.sqrt(math.fsum(w * w for w in target.values()))

    result = {}
    for word, weight in ctx.items():
        candidates = inv.senses.get(word)
        if not candidates:
            raise InconsistentInventory(f"context word {word!r} of {s} has no senses")
        best = candidates[0]
        if len(candidates) > 1:
            best_score = _similarity(target, norm, inv.contexts[best])
            for cand in candidates[1:]:
                score = _similarity(target, norm, inv.contexts[cand])
                if score > best_score:
                    best, best_score = cand, score
        result[best] = weight
    return result


def build_sense_graph(inv: SenseInventory,
                      dis: Mapping[SenseId, Mapping[SenseId, float]]) -> SenseGraph:
    """Connect each sense to the senses in its disambiguated context.

    An edge seen from both ends with different weights keeps the larger.
    """
    missing = inv.contexts.keys() - dis.keys()
    if missing:
        raise InconsistentInventory(f"no disambiguated context for {min(missing)}")
    weights: dict[tuple[SenseId, SenseId], float] = {}
    for s, ctx in dis.items():
        if s not in inv:
            raise InconsistentInventory(f"dangling sense {s}")
        for t, w in ctx.items():
            if t not in inv:
                raise InconsistentInventory(f"dangling sense {t} in context of {s}")
            key = (s, t) if s < t else (t, s)
            weights[key] = max(w, weights.get(key, 0.0))
    return Graph(inv.all_senses(), ((s, t, w) for (s, t), w in sorted(weights.items())))


@dataclass
class WatsetResult:
    inventory: SenseInventory
    sense_graph: SenseGraph
    sense_clusters: list[frozenset[SenseId]]
    clusters: list[frozenset[str]]


# Per-process state for parallel runs; set by _init_worker.
_worker_graph: WordGraph | None = None
_worker_local: Clusterer | None = None
_worker_inventory: SenseInventory | None = None


def _init_worker(g, local, inv):
    global _worker_graph, _worker_local, _worker_inventory
    _worker_graph, _worker_local, _worker_inventory = g, local, inv


def _induce_in_worker(u):
    return induce_senses(_worker_graph, u, _worker_local)


def _disambiguate_in_worker(s):
    return disambiguate_context(_worker_inventory, s)


def induce_inventory(g: WordGraph, local: Clusterer, workers: int = 1) -> SenseInventory:
    words = g.sorted_nodes()
    if workers > 1:
        with ProcessPoolExecutor(workers, initializer=_init_worker,
                                 initargs=(g, local, None)) as pool:
            results = list(pool.map(_induce_in_worker, words, chunksize=64))
    else:
        results = [induce_senses(g, u, local) for u in words]
    inv = SenseInventory()
    for u, senses in zip(words, results):
        inv.add(u, senses)
    return inv


def disambiguate_all(inv: SenseInventory, workers: int = 1) -> dict[SenseId, dict[SenseId, float]]:
    senses = inv.all_senses()
    if workers > 1:
        with ProcessPoolExecutor(workers, initializer=_init_worker,
                                 initargs=(None, None, inv)) as pool:
            results = list(pool.map(_disambiguate_in_worker, senses, chunksize=64))
    else:
        results = [disambiguate_context(inv, s) for s in senses]
    return dict(zip(senses, results))


def watset(g: WordGraph, local: Clusterer, global_: Clusterer,
           workers: int = 1) -> WatsetResult:
    """Run the full pipeline and keep the intermediate artefacts."""
    if not len(g):
        raise EmptyInput("cannot cluster an empty graph")
    inv = induce_inventory(g, local, workers)
    log.info("induced %d senses for %d words", len(inv), len(g))
    dis = disambiguate_all(inv, workers)
    sense_graph = build_sense_graph(inv, dis)
    log.info("sense graph has %d nodes and %d edges",
             len(sense_graph), sense_graph.number_of_edges())
    sense_clusters = sort_clusters(global_(sense_graph))
    words = {frozenset(s.word for s in cluster) for cluster in sense_clusters}
    return WatsetResult(inv, sense_graph, sense_clusters, sort_clusters(words))


def run_watset(g: WordGraph, local: Clusterer, global_: Clusterer,
               workers: int = 1) -> list[frozenset[str]]:
    return watset(g, local, global_, workers).clusters
