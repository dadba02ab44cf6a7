"""Pretrained word vectors in the word2vec text format."""

from __future__ import annotations

import io
import logging
import os
from dataclasses import dataclass, field
from typing import IO

import numpy as np

from .errors import EmptyInput, FormatError

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class VectorStore:
    dimension: int
    vectors: dict[str, np.ndarray] = field(repr=False)

    def __post_init__(self):
        if self.dimension < 1:
            raise FormatError(f"dimension must be positive, got {self.dimension}")
        for word, vec in self.vectors.items():
            if vec.shape != (self.dimension,):
                raise FormatError(f"vector for {word!r} has shape {vec.shape}")

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, word: str) -> bool:
        return self.get(word) is not None

    def get(self, word: str) -> np.ndarray | None:
        vec = self.vectors.get(word)
        if vec is None and " " in word:
            # word2vec vocabularies join multiword expressions with underscores
            vec = self.vectors.get(word.replace(" ", "_"))
        return vec

    def cosine(self, u: str, v: str) -> float | None:
        return cosine(self, u, v)


def cosine(store: VectorStore, u: str, v: str) -> float | None:
    """Cosine similarity of two words, or ``None`` if either is unusable.

    Unknown words and zero vectors both count as unusable.
    """
    a, b = store.get(u), store.get(v)
    if a is None or b is None:
        return None
    # Sort the operands so that cosine(u, v) == cosine(v, u) bit for bit.
    if u > v:
        a, b = b, a
    na, nb = np.linalg.norm(a), np.linalg.norm(b)
    if na == 0 or nb == 0:
        return None
    sim = float(np.dot(a, b) / (na * nb))
    return min(1.0, max(-1.0, sim))


def load_vectors(source: str | os.PathLike | IO) -> VectorStore:
    """Read vectors from a path or a text/byte stream.

    An optional ``<count> <dim>`` header is honoured; otherwise the dimension
    comes from the first vector. Lines with non-numeric components are
    skipped with a warning; a line of the wrong length is a FormatError.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as f:
            return load_vectors(f)
    if isinstance(source, io.TextIOBase):
        lines = iter(source)
    else:
        lines = (raw.decode("utf-8") for raw in source)

    dimension = None
    vectors: dict[str, np.ndarray] = {}
    first = True
    for lineno, line in enumerate(lines, 1):
        tokens = line.split()
        if not tokens:
            continue
        if first:
            first = False
            if len(tokens) == 2 and all(t.isdigit() for t in tokens):
                dimension = int(tokens[1])
                continue
        if dimension is None:
            dimension = len(tokens) - 1
            if dimension < 1:
                raise FormatError(f"line {lineno}: no vector components")
        if len(tokens) - 1 != dimension:
            raise FormatError(f"line {lineno}: expected {dimension} components, "
                              f"got {len(tokens) - 1}")
        try:
            vec = np.array(tokens[1:], dtype=np.float64)
        except ValueError:
            log.warning("line %d: skipping unparseable vector for %r", lineno, tokens[0])
            continue
        vectors[tokens[0]] = vec

    if not vectors:
        raise EmptyInput("no vectors found")
    return VectorStore(dimension, vectors)
