"""Fuzzy graph clustering for synset induction from synonymy dictionaries."""

__version__ = "0.1.0"

from .baselines import (CpmParams, EcoParams, clique_percolation, eco,
                        eco_probabilities, maxmax)
from .clustering import (CWMode, MCLParams, chinese_whispers, make_clusterer,
                         markov_clustering)
from .embeddings import VectorStore, cosine, load_vectors
from .evaluation import EvalReport, cross_evaluate, expand_pairs, paired_prf
from .fuzzy import (SenseId, SenseInventory, build_sense_graph,
                    disambiguate_context, induce_senses, run_watset, watset)
from .graph import Graph, Weighting, build_graph, ego_network

__all__ = [
    "CWMode", "CpmParams", "EcoParams", "EvalReport", "Graph", "MCLParams",
    "SenseId", "SenseInventory", "VectorStore", "Weighting", "build_graph",
    "build_sense_graph", "chinese_whispers", "clique_percolation", "cosine",
    "cross_evaluate", "disambiguate_context", "eco", "eco_probabilities",
    "ego_network", "expand_pairs", "induce_senses", "load_vectors",
    "make_clusterer", "markov_clustering", "maxmax", "paired_prf",
    "run_watset", "watset",
]
