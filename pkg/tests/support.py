"""Shared helpers for the test suite."""
from __future__ import annotations

import itertools
import random

import networkx as nx

from greedycactus import Graph, build_graph, random_christmas_cactus


def to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.vertex_count))
    G.add_edges_from(g.edges)
    return G


def complete_graph(n: int) -> Graph:
    return build_graph(n, list(itertools.combinations(range(n), 2)))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    return build_graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def small_cactus_corpus(count: int, max_n: int, seed: int = 0) -> list[Graph]:
    """Random Christmas cactuses with assorted sizes, deterministic."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(2, max_n)
        out.append(random_christmas_cactus(n, seed * 10_000 + i))
    return out
