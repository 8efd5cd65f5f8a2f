"""Shared corpus generators and oracle helpers for the test suite.

Everything random is seeded; corpora are deterministic across runs.
"""

from __future__ import annotations

import itertools
import random

import pytest

from f5lab.core import ThreeGraph
from f5lab.detect import find_F5, find_K4_3minus


def all_triples(n):
    return list(itertools.combinations(range(n), 3))


def random_three_graph(rng: random.Random, n: int, m: int | None = None) -> ThreeGraph:
    triples = all_triples(n)
    if m is None:
        m = rng.randint(0, len(triples))
    return ThreeGraph(n, rng.sample(triples, m))


def repair_to_cancellative(h: ThreeGraph, rng: random.Random) -> ThreeGraph:
    """Delete one edge of a violating pattern until both detectors are clean."""
    edges = list(h.edges)
    while True:
        g = ThreeGraph(h.n, edges)
        w = find_F5(g) or find_K4_3minus(g)
        if w is None:
            return g
        edges.remove(rng.choice(w.edges))


def repair_to_f5_free(h: ThreeGraph, rng: random.Random) -> ThreeGraph:
    edges = list(h.edges)
    while True:
        g = ThreeGraph(h.n, edges)
        w = find_F5(g)
        if w is None:
            return g
        edges.remove(rng.choice(w.edges))


def make_corpus(seed: int, count: int, kind: str, n_range=(5, 8)):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(*n_range)
        h = random_three_graph(rng, n)
        if kind == "cancellative":
            h = repair_to_cancellative(h, rng)
        elif kind == "f5free":
            h = repair_to_f5_free(h, rng)
        out.append(h)
    return out


@pytest.fixture(scope="session")
def cancellative_corpus():
    return make_corpus(101, 500, "cancellative")


@pytest.fixture(scope="session")
def f5_free_corpus():
    return make_corpus(202, 500, "f5free")


@pytest.fixture(scope="session")
def raw_corpus():
    return make_corpus(303, 1000, "raw")
