"""Plane embeddings and exact greedy certification.

An embedding is greedy when every ordered vertex pair (s, t) admits a neighbor
v of s strictly closer to t.  Certification computes all n(n-1) relative
margins (|st| - min_v |vt|) / |st| in one vectorized pass; a second, deliberately
independent oracle re-derives the verdict per target via directed reachability
so the two routes can be cross-checked at tolerance 0.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .graphs import Graph

GREEDY = "GREEDY"
VIOLATED = "VIOLATED"


class Embedding:
    """Per-vertex points in the plane, stored as a read-only (n, 2) float array."""

    __slots__ = ("points",)

    def __init__(self, points) -> None:
        pts = np.array(points, dtype=float)
        if pts.ndim != 2 or pts.shape[1] != 2:
            raise ValueError(f"points must have shape (n, 2), got {pts.shape}")
        if not np.all(np.isfinite(pts)):
            bad = int(np.argwhere(~np.isfinite(pts).all(axis=1))[0][0])
            raise ValueError(f"nonfinite coordinate at vertex {bad}")
        pts.setflags(write=False)
        self.points = pts

    @property
    def vertex_count(self) -> int:
        return self.points.shape[0]

    def point(self, v: int) -> tuple[float, float]:
        x, y = self.points[v]
        return (float(x), float(y))

    def transformed(self, scale: float = 1.0, angle: float = 0.0, shift=(0.0, 0.0)) -> "Embedding":
        """Similarity image: rotate by `angle` radians, scale, then translate."""
        c, s = math.cos(angle), math.sin(angle)
        rot = np.array([[c, -s], [s, c]])
        return Embedding(scale * (self.points @ rot.T) + np.asarray(shift, dtype=float))


def _distance_matrix(e: Embedding) -> np.ndarray:
    p = e.points
    d = np.sqrt(((p[:, None, :] - p[None, :, :]) ** 2).sum(axis=-1))
    return d


def _check_pair(g: Graph, e: Embedding) -> np.ndarray:
    if e.vertex_count != g.vertex_count:
        raise ValueError(
            f"embedding has {e.vertex_count} points but graph has {g.vertex_count} vertices"
        )
    d = _distance_matrix(e)
    if g.vertex_count > 1:
        off = d.copy()
        np.fill_diagonal(off, np.inf)
        if np.min(off) == 0.0:
            i, j = np.unravel_index(int(np.argmin(off)), off.shape)
            raise ValueError(f"coincident points at vertices {min(i, j)} and {max(i, j)}")
    return d


@dataclass(frozen=True, eq=False)
class GreedyCertificate:
    """Outcome of exhaustive margin certification.

    `margins[s, t]` is the relative margin of the ordered pair (s, t); the
    diagonal is NaN.  GREEDY exactly when the minimum margin exceeds the
    tolerance the check was run with.
    """

    verdict: str
    margins: np.ndarray
    worst_pair: tuple[int, int] | None
    min_relative_margin: float
    aspect_ratio: float
    tolerance: float

    def __bool__(self) -> bool:
        return self.verdict == GREEDY


def verify_greedy(g: Graph, e: Embedding, tolerance: float = 1e-9) -> GreedyCertificate:
    """Certify greediness of an embedding by computing every ordered-pair margin."""
    d = _check_pair(g, e)
    n = g.vertex_count
    if n <= 1:
        ratio = _aspect_from_distances(g, d) if g.edges else float("nan")
        return GreedyCertificate(GREEDY, np.full((n, n), np.nan), None, math.inf, ratio, tolerance)
    adj = g.adjacency()
    margins = np.full((n, n), np.nan)
    for s in range(n):
        nbrs = adj[s]
        if not nbrs:
            # isolated vertex cannot route anywhere; margin -inf flags it
            margins[s, :] = -np.inf
            margins[s, s] = np.nan
            continue
        best = d[nbrs, :].min(axis=0)
        margins[s, :] = (d[s, :] - best) / np.where(d[s, :] > 0, d[s, :], 1.0)
        margins[s, s] = np.nan
    flat = np.where(np.isnan(margins), np.inf, margins)
    idx = int(np.argmin(flat))
    worst = (idx // n, idx % n)
    min_margin = float(flat[worst])
    verdict = GREEDY if min_margin > tolerance else VIOLATED
    return GreedyCertificate(verdict, margins, worst, min_margin, _aspect_from_distances(g, d), tolerance)


def verify_greedy_oracle(g: Graph, e: Embedding) -> str:
    """Reachability re-derivation of the verdict, sharing no code with verify_greedy.

    For each target t, orient every edge {u, v} toward the endpoint strictly
    closer to t and demand that all vertices reach t in that digraph.
    """
    if e.vertex_count != g.vertex_count:
        raise ValueError(
            f"embedding has {e.vertex_count} points but graph has {g.vertex_count} vertices"
        )
    n = g.vertex_count
    pts = [e.point(v) for v in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            if pts[i] == pts[j] or math.dist(pts[i], pts[j]) == 0.0:
                raise ValueError(f"coincident points at vertices {i} and {j}")
    for t in range(n):
        dist_t = [math.dist(p, pts[t]) for p in pts]
        # arcs u -> v with dist_t[v] < dist_t[u]; walk them backwards from t
        incoming: list[list[int]] = [[] for _ in range(n)]
        for u, v in g.edges:
            if dist_t[v] < dist_t[u]:
                incoming[v].append(u)
            elif dist_t[u] < dist_t[v]:
                incoming[u].append(v)
        reached = [False] * n
        reached[t] = True
        queue = deque([t])
        count = 1
        while queue:
            w = queue.popleft()
            for u in incoming[w]:
                if not reached[u]:
                    reached[u] = True
                    count += 1
                    queue.append(u)
        if count != n:
            return VIOLATED
    return GREEDY


@dataclass(frozen=True)
class NoDescent:
    """Greedy forwarding got stuck: no neighbor of `stuck` is closer to the target."""

    stuck: int

    def __bool__(self) -> bool:
        return False


def greedy_path(g: Graph, e: Embedding, s: int, t: int) -> list[int] | NoDescent:
    """Follow closest-neighbor forwarding from s to t; ties go to the smallest index."""
    if s == t:
        raise ValueError("source and target coincide")
    _check_pair(g, e)
    adj = g.adjacency()
    pt = e.point(t)
    path = [s]
    cur = s
    cur_dist = math.dist(e.point(cur), pt)
    for _ in range(g.vertex_count):
        if cur == t:
            return path
        step = min(adj[cur], key=lambda v: (math.dist(e.point(v), pt), v), default=None)
        if step is None or math.dist(e.point(step), pt) >= cur_dist:
            return NoDescent(cur)
        cur = step
        cur_dist = math.dist(e.point(cur), pt)
        path.append(cur)
    raise RuntimeError("greedy walk exceeded vertex count without terminating")


def _aspect_from_distances(g: Graph, d: np.ndarray) -> float:
    if not g.edges:
        raise ValueError("aspect ratio is undefined for an edgeless graph")
    lengths = np.array([d[u, v] for u, v in g.edges])
    return float(lengths.max() / lengths.min())


def aspect_ratio(g: Graph, e: Embedding) -> float:
    """Longest edge length over shortest edge length."""
    d = _check_pair(g, e)
    return _aspect_from_distances(g, d)
