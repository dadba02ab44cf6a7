#!/usr/bin/env python3
"""Regenerate the bundled toy dictionary, vectors and gold synsets.

The toy lexicon has 200 pseudo-words grouped into concepts. About one word
in eight belongs to two concepts, so the synonymy graph has hubs the way a
real dictionary does. Pairs are listed one to three times to give the
``count`` weighting something to count, and a few spurious pairs are added.
Vectors are the sum of the word's concept centroids plus noise.
"""

import itertools
import random
from pathlib import Path

import numpy as np

OUT = Path(__file__).resolve().parent.parent / "src" / "watset" / "data"
SEED = 2017
N_WORDS = 200
DIM = 10
ONSETS = ["b", "d", "f", "g", "k", "l", "m", "n", "p", "r", "s", "t", "v", "z"]
VOWELS = ["a", "e", "i", "o", "u"]


def pseudo_words(rng, n):
    words = set()
    while len(words) < n:
        words.add("".join(rng.choice(ONSETS) + rng.choice(VOWELS)
                          for _ in range(rng.randint(2, 3))))
    return sorted(words)


def main():
    rng = random.Random(SEED)
    nprng = np.random.default_rng(SEED)
    words = pseudo_words(rng, N_WORDS)
    rng.shuffle(words)

    concepts = []
    pool = list(words)
    while pool:
        size = min(rng.randint(3, 6), len(pool))
        concepts.append(pool[:size])
        pool = pool[size:]
    if len(concepts[-1]) < 2:
        concepts[-2].extend(concepts.pop())

    # polysemous words join a second concept
    for word in rng.sample(words, N_WORDS // 8):
        home = next(c for c in concepts if word in c)
        other = rng.choice([c for c in concepts if c is not home])
        other.append(word)

    pairs = []
    for concept in concepts:
        for u, v in itertools.combinations(concept, 2):
            if rng.random() < 0.75:
                pairs.extend([(u, v) if rng.random() < 0.5 else (v, u)]
                             * rng.choice([1, 1, 2, 3]))
        # a spanning chain keeps every concept connected
        for u, v in zip(concept, concept[1:]):
            pairs.append((u, v))
    for _ in range(12):
        pairs.append(tuple(rng.sample(words, 2)))
    rng.shuffle(pairs)

    centroids = nprng.normal(size=(len(concepts), DIM))
    vectors = {w: np.zeros(DIM) for w in words}
    for c, concept in enumerate(concepts):
        for w in concept:
            vectors[w] += centroids[c]
    for w in words:
        vectors[w] += nprng.normal(scale=0.6, size=DIM)

    OUT.mkdir(parents=True, exist_ok=True)
    with open(OUT / "toy_pairs.tsv", "w", encoding="utf-8") as f:
        f.write("# toy synonymy dictionary; regenerate with scripts/make_toy_data.py\n")
        for u, v in pairs:
            f.write(f"{u}\t{v}\n")
    with open(OUT / "toy_vectors.txt", "w", encoding="utf-8") as f:
        f.write(f"{len(words)} {DIM}\n")
        for w in sorted(words):
            f.write(w + " " + " ".join(f"{x:.5f}" for x in vectors[w]) + "\n")
    with open(OUT / "toy_gold.tsv", "w", encoding="utf-8") as f:
        for concept in sorted(concepts, key=lambda c: sorted(c)):
            f.write("\t".join(sorted(concept)) + "\n")


if __name__ == "__main__":
    main()
