"""Undirected simple graphs, block-cut decomposition, Christmas cactus recognition.

A Christmas cactus is a connected graph in which every biconnected block is a
single edge or a simple cycle and every cutvertex lies in at most two blocks.
That last condition is what separates these graphs from general cacti: a vertex
can continue into at most one further block, so branching happens only along
cycles, never at a shared cutvertex.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

BRIDGE = "BRIDGE"
CYCLE = "CYCLE"
OTHER = "OTHER"


@dataclass(frozen=True)
class Graph:
    """Immutable undirected simple graph with optional per-vertex labels."""

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    labels: tuple[str, ...] | None = None

    def adjacency(self) -> list[list[int]]:
        """Neighbor lists, each sorted ascending."""
        adj: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        for nbrs in adj:
            nbrs.sort()
        return adj

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)


def build_graph(
    vertex_count: int,
    edges: list[tuple[int, int]] | tuple[tuple[int, int], ...],
    labels: list[str] | tuple[str, ...] | None = None,
) -> Graph:
    """Validate and normalize into a Graph (edges stored sorted, endpoints ordered)."""
    if vertex_count < 0:
        raise ValueError(f"vertex_count must be nonnegative, got {vertex_count}")
    normalized: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for u, v in edges:
        if not (0 <= u < vertex_count) or not (0 <= v < vertex_count):
            raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{vertex_count - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        e = (u, v) if u < v else (v, u)
        if e in seen:
            raise ValueError(f"duplicate edge ({e[0]}, {e[1]})")
        seen.add(e)
        normalized.append(e)
    normalized.sort()
    if labels is not None:
        if len(labels) != vertex_count:
            raise ValueError(f"expected {vertex_count} labels, got {len(labels)}")
        labels = tuple(labels)
    return Graph(vertex_count, tuple(normalized), labels)


def is_connected(g: Graph) -> bool:
    if g.vertex_count <= 1:
        return True
    adj = g.adjacency()
    seen = [False] * g.vertex_count
    seen[0] = True
    queue = deque([0])
    count = 1
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                count += 1
                queue.append(v)
    return count == g.vertex_count


@dataclass(frozen=True)
class Block:
    """One biconnected component: a bridge edge, a simple cycle, or anything else.

    For CYCLE blocks `vertices` holds the cyclic order (starting at the smallest
    vertex, toward its smaller neighbor); for BRIDGE the two endpoints; for
    OTHER the sorted vertex set.
    """

    kind: str
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class BlockCutTree:
    """Blocks of a connected graph, rooted at a chosen vertex.

    `entries[b]` is the vertex of block b nearest the root (the root itself for
    the root's own blocks); `blocks_of[v]` lists the blocks containing v.
    Cutvertices are exactly the vertices lying in two or more blocks.
    """

    blocks: tuple[Block, ...]
    cutvertices: frozenset[int]
    root: int
    entries: tuple[int, ...]
    blocks_of: tuple[tuple[int, ...], ...]

    @property
    def block_adjacency(self) -> dict[int, tuple[int, ...]]:
        """Cutvertex -> indices of the blocks sharing it."""
        return {v: self.blocks_of[v] for v in sorted(self.cutvertices)}

    def child_blocks(self, v: int) -> tuple[int, ...]:
        """Blocks whose entry is v, in index order."""
        return tuple(b for b in self.blocks_of[v] if self.entries[b] == v)


def _biconnected_components(n: int, adj: list[list[int]]) -> list[list[tuple[int, int]]]:
    """Edge sets of the biconnected components (iterative Hopcroft-Tarjan)."""
    disc = [-1] * n
    low = [0] * n
    timer = 0
    comps: list[list[tuple[int, int]]] = []
    edge_stack: list[tuple[int, int]] = []
    for start in range(n):
        if disc[start] != -1 or not adj[start]:
            continue
        disc[start] = low[start] = timer
        timer += 1
        stack = [(start, -1, iter(adj[start]))]
        while stack:
            u, parent, it = stack[-1]
            advanced = False
            for v in it:
                if v == parent:
                    parent = -2  # skip the tree edge to the parent exactly once
                    stack[-1] = (u, -2, it)
                    continue
                if disc[v] == -1:
                    edge_stack.append((u, v))
                    disc[v] = low[v] = timer
                    timer += 1
                    stack.append((v, u, iter(adj[v])))
                    advanced = True
                    break
                if disc[v] < disc[u]:
                    edge_stack.append((u, v))
                    if disc[v] < low[u]:
                        low[u] = disc[v]
            if not advanced:
                stack.pop()
                if stack:
                    p = stack[-1][0]
                    if low[u] < low[p]:
                        low[p] = low[u]
                    if low[u] >= disc[p]:
                        comp = []
                        while edge_stack:
                            e = edge_stack.pop()
                            comp.append(e)
                            if e == (p, u):
                                break
                        comps.append(comp)
    return comps


def _classify(edges: list[tuple[int, int]]) -> Block:
    verts = sorted({v for e in edges for v in e})
    norm = tuple(sorted((min(u, v), max(u, v)) for u, v in edges))
    if len(edges) == 1:
        return Block(BRIDGE, tuple(verts), norm)
    deg: dict[int, list[int]] = {v: [] for v in verts}
    for u, v in edges:
        deg[u].append(v)
        deg[v].append(u)
    if len(edges) == len(verts) and all(len(nb) == 2 for nb in deg.values()):
        # simple cycle: walk it starting at the smallest vertex, smaller neighbor first
        start = verts[0]
        order = [start]
        prev, cur = start, min(deg[start])
        while cur != start:
            order.append(cur)
            a, b = deg[cur]
            prev, cur = cur, (b if a == prev else a)
        return Block(CYCLE, tuple(order), norm)
    return Block(OTHER, tuple(verts), norm)


def block_cut_decompose(g: Graph, root: int = 0) -> BlockCutTree:
    """Split a connected graph into blocks and root the block tree at `root`."""
    if g.vertex_count == 0:
        return BlockCutTree((), frozenset(), root, (), ())
    if not (0 <= root < g.vertex_count):
        raise ValueError(f"root {root} out of range")
    if not is_connected(g):
        raise ValueError("graph is not connected")
    comps = _biconnected_components(g.vertex_count, g.adjacency())
    blocks = tuple(_classify(c) for c in comps)

    blocks_of: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for b, blk in enumerate(blocks):
        for v in blk.vertices:
            blocks_of[v].append(b)
    cutvertices = frozenset(v for v in range(g.vertex_count) if len(blocks_of[v]) >= 2)

    # Entry of each block = its vertex closest to the root, found by BFS over blocks.
    entries = [-1] * len(blocks)
    claimed = [False] * g.vertex_count
    claimed[root] = True
    queue = deque(sorted(blocks_of[root]))
    for b in queue:
        entries[b] = root
    while queue:
        b = queue.popleft()
        for v in blocks[b].vertices:
            if claimed[v]:
                continue
            claimed[v] = True
            for nb in blocks_of[v]:
                if entries[nb] == -1:
                    entries[nb] = v
                    queue.append(nb)

    return BlockCutTree(blocks, cutvertices, root, tuple(entries), tuple(tuple(bs) for bs in blocks_of))


@dataclass(frozen=True)
class CactusCheck:
    """Recognition verdict with the first violated condition, if any."""

    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_christmas_cactus(g: Graph) -> CactusCheck:
    """Connected, every block a bridge or simple cycle, every cutvertex in <=2 blocks."""
    if not is_connected(g):
        return CactusCheck(False, "graph is not connected")
    tree = block_cut_decompose(g, 0)
    for blk in tree.blocks:
        if blk.kind == OTHER:
            return CactusCheck(
                False,
                f"block on vertices {list(blk.vertices)} is neither a bridge nor a simple cycle",
            )
    for v in sorted(tree.cutvertices):
        if len(tree.blocks_of[v]) > 2:
            return CactusCheck(False, f"vertex {v} lies in {len(tree.blocks_of[v])} blocks")
    return CactusCheck(True, None)
