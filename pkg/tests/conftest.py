"""Shared test helpers: tiny independent oracles and random graph generation.

The oracle functions here deliberately avoid the package's bitmask/flow
machinery: plain itertools over vertex lists, so agreement tests actually
compare two routes.
"""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from predim.graphs import Graph


def make_graph(n, edges, prefix="v"):
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    return Graph(names, [(names[a], names[b]) for a, b in edges])


def random_graph(rng, n, p=0.5, prefix="v"):
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    edges = [
        (names[i], names[j])
        for i in range(n)
        for j in range(i + 1, n)
        if rng.random() < p
    ]
    return Graph(names, edges)


def all_labeled_graphs(n, prefix="v"):
    """Every labeled graph on n vertices (2^(n choose 2) of them)."""
    names = [f"{prefix}{i}" for i in range(1, n + 1)]
    slots = list(combinations(names, 2))
    for mask in range(1 << len(slots)):
        yield Graph(names, [slots[i] for i in range(len(slots)) if mask >> i & 1])


def oracle_edges_within(graph, subset):
    subset = set(subset)
    return sum(1 for u, v in graph.edges if u in subset and v in subset)


def oracle_delta(graph, subset, alpha):
    return Fraction(alpha) * len(set(subset)) - oracle_edges_within(graph, subset)


def oracle_is_closed(sub, sup, graph, alpha):
    """Plain quantifier over every intermediate set."""
    sub, sup = set(sub), set(sup)
    base = oracle_delta(graph, sub, alpha)
    extra = sorted(sup - sub)
    for k in range(len(extra) + 1):
        for combo in combinations(extra, k):
            if oracle_delta(graph, sub | set(combo), alpha) < base:
                return False
    return True


def oracle_closure(seed, graph, alpha):
    """Smallest closed superset by scanning supersets in size order."""
    seed = set(seed)
    rest = sorted(set(graph.vertices) - seed)
    for k in range(len(rest) + 1):
        for combo in combinations(rest, k):
            candidate = seed | set(combo)
            if oracle_is_closed(candidate, graph.vertices, graph, alpha):
                return frozenset(candidate)
    return frozenset(graph.vertices)


@pytest.fixture(scope="session")
def rng():
    return random.Random(20240811)
