"""Paired precision, recall and F-score against gold synsets."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import IO, Iterable

from .errors import EmptyGold

DEFAULT_PRUNE = 150


@dataclass(frozen=True)
class EvalReport:
    precision: float
    recall: float
    f1: float
    predicted_pairs: int
    gold_pairs: int
    true_positives: int
    pruned_clusters: int = 0

    def as_row(self) -> str:
        return "\t".join(str(x) for x in (
            self.precision, self.recall, self.f1, self.predicted_pairs,
            self.gold_pairs, self.true_positives, self.pruned_clusters))


def expand_pairs(synsets: Iterable[Iterable[str]]) -> set[tuple[str, str]]:
    """All unordered pairs of distinct co-members, as sorted tuples."""
    pairs = set()
    for synset in synsets:
        pairs.update(itertools.combinations(sorted(set(synset)), 2))
    return pairs


def paired_prf(predicted: Iterable[Iterable[str]], gold: Iterable[Iterable[str]],
               prune_threshold: int | None = DEFAULT_PRUNE) -> EvalReport:
    """Compare synonym pairs of the predicted and gold synsets.

    Predicted clusters with ``prune_threshold`` or more words are dropped
    before expansion; ``None`` keeps everything. Precision is 0 when no
    predicted pairs remain, and recall is 0 when gold has no pairs.
    """
    gold = [set(s) for s in gold]
    if not gold:
        raise EmptyGold("the gold standard has no synsets")
    predicted = [set(s) for s in predicted]
    pruned = 0
    if prune_threshold is not None:
        kept = [s for s in predicted if len(s) < prune_threshold]
        pruned = len(predicted) - len(kept)
        predicted = kept

    pred_pairs = expand_pairs(predicted)
    gold_pairs = expand_pairs(gold)
    tp = len(pred_pairs & gold_pairs)
    precision = tp / len(pred_pairs) if pred_pairs else 0.0
    recall = tp / len(gold_pairs) if gold_pairs else 0.0
    f1 = 2 * precision * recall / (precision + recall) if precision + recall else 0.0
    return EvalReport(precision, recall, f1, len(pred_pairs), len(gold_pairs), tp, pruned)


def cross_evaluate(resource_a, resource_b) -> EvalReport:
    """Score one lexical resource against another, without pruning."""
    return paired_prf(resource_a, resource_b, None)


def read_synsets(stream: IO[str]) -> list[frozenset[str]]:
    """One synset per line, tab-separated words; blank and ``#`` lines skipped."""
    synsets = []
    for line in stream:
        line = line.rstrip("\r\n")
        if not line.strip() or line.startswith("#"):
            continue
        synsets.append(frozenset(w for w in line.split("\t") if w))
    return synsets


def write_synsets(clusters: Iterable[Iterable[str]], stream: IO[str]) -> None:
    for cluster in clusters:
        stream.write("\t".join(sorted(cluster)) + "\n")
