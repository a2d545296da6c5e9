"""Generators for the lower-bound graph families and random Christmas cactuses.

G_k is a chain of k triangles sharing spine vertices u_0..u_{k+1}: triangle i
joins u_i, u_{i+1} and an apex v_{i+1}, each apex v_i carries a pendant leaf
w_{i+1}, and a final bridge extends the spine to u_{k+1}.  F_k glues 30 copies
of G_k onto a 31-cycle by identifying each copy's u_0 with a cycle vertex
(c_30 stays bare), giving 90k+61 vertices in total.
"""
from __future__ import annotations

import random
from dataclasses import dataclass

from .graphs import Graph, build_graph

GK = "GK"
FK = "FK"

FK_COPIES = 30
FK_CYCLE_LEN = 31


@dataclass(frozen=True)
class CopyMap:
    """Vertex ids of one copy's roles: u_0..u_{k+1}, v_1..v_k, w_2..w_{k+1}."""

    us: tuple[int, ...]
    vs: tuple[int, ...]
    ws: tuple[int, ...]

    def u(self, i: int) -> int:
        return self.us[i]

    def v(self, i: int) -> int:
        return self.vs[i - 1]

    def w(self, i: int) -> int:
        return self.ws[i - 2]

    @property
    def k(self) -> int:
        return len(self.vs)

    def all_vertices(self) -> tuple[int, ...]:
        return self.us + self.vs + self.ws


@dataclass(frozen=True)
class FamilyInstance:
    graph: Graph
    k: int
    kind: str
    copies: tuple[CopyMap, ...]
    roots: tuple[int, ...]
    cycle_vertices: tuple[int, ...] = ()

    @property
    def default_root(self) -> int:
        # FK embeds from the bare cycle vertex; GK from u_0.
        return self.cycle_vertices[-1] if self.kind == FK else self.roots[0]


def _copy_edges(cm: CopyMap) -> list[tuple[int, int]]:
    k = cm.k
    edges = [(cm.u(i), cm.u(i + 1)) for i in range(k + 1)]
    for i in range(k):
        edges.append((cm.u(i), cm.v(i + 1)))
        edges.append((cm.u(i + 1), cm.v(i + 1)))
    for i in range(1, k + 1):
        edges.append((cm.v(i), cm.w(i + 1)))
    return edges


def gen_gk(k: int) -> FamilyInstance:
    """Chain-of-triangles instance on 3k+2 vertices, rooted at u_0."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    us = tuple(range(k + 2))
    vs = tuple(range(k + 2, 2 * k + 2))
    ws = tuple(range(2 * k + 2, 3 * k + 2))
    cm = CopyMap(us, vs, ws)
    labels = [f"u{i}" for i in range(k + 2)]
    labels += [f"v{i}" for i in range(1, k + 1)]
    labels += [f"w{i}" for i in range(2, k + 2)]
    g = build_graph(3 * k + 2, _copy_edges(cm), labels)
    return FamilyInstance(g, k, GK, (cm,), (0,))


def gen_fk(k: int) -> FamilyInstance:
    """Thirty G_k copies rooted on a 31-cycle; copy j's u_0 is cycle vertex c_j."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    cycle = tuple(range(FK_CYCLE_LEN))
    labels = [f"c{i}" for i in range(FK_CYCLE_LEN)]
    edges = [(i, (i + 1) % FK_CYCLE_LEN) for i in range(FK_CYCLE_LEN)]
    copies = []
    per_copy = 3 * k + 1  # fresh vertices per copy; u_0 is shared with the cycle
    for j in range(FK_COPIES):
        base = FK_CYCLE_LEN + j * per_copy
        us = (j,) + tuple(range(base, base + k + 1))
        vs = tuple(range(base + k + 1, base + 2 * k + 1))
        ws = tuple(range(base + 2 * k + 1, base + 3 * k + 1))
        cm = CopyMap(us, vs, ws)
        copies.append(cm)
        labels += [f"u{i}.{j}" for i in range(1, k + 2)]
        labels += [f"v{i}.{j}" for i in range(1, k + 1)]
        labels += [f"w{i}.{j}" for i in range(2, k + 2)]
        edges += _copy_edges(cm)
    n = 90 * k + 61
    g = build_graph(n, edges, labels)
    return FamilyInstance(g, k, FK, tuple(copies), tuple(range(FK_COPIES)), cycle)


def random_christmas_cactus(n: int, seed: int) -> Graph:
    """Grow a random Christmas cactus on exactly n vertices.

    Blocks (bridges or cycles of size 3..8) are attached to vertices that still
    have a free block slot; every vertex ends up in at most two blocks, so the
    result is a Christmas cactus by construction.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    rng = random.Random(seed)
    edges: list[tuple[int, int]] = []
    block_count = [0]  # per vertex
    open_slots = [0]  # vertices in <2 blocks
    count = 1
    while count < n:
        x = rng.choice(open_slots)
        remaining = n - count
        if remaining >= 2 and rng.random() < 0.5:
            m = rng.randint(2, min(7, remaining))  # new cycle vertices
            ring = [x] + list(range(count, count + m))
            for a, b in zip(ring, ring[1:] + [x]):
                edges.append((a, b))
            for v in ring[1:]:
                block_count.append(1)
                open_slots.append(v)
            count += m
        else:
            y = count
            edges.append((x, y))
            block_count.append(1)
            open_slots.append(y)
            count += 1
        block_count[x] += 1
        if block_count[x] >= 2:
            open_slots.remove(x)
    return build_graph(n, edges)
