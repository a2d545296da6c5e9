"""Constructive greedy embedding of Christmas cactuses.

The layout is recursive: each block hangs off its entry vertex.  Bridges
extend straight along the entry's outward ray; a cycle of size m+1 is drawn
on a circle through its entry with the other m vertices spread around it,
each continuing its subtree along its own outward radial ray.  Slot angles
are shifted so the heaviest branch continues dead ahead, keeping the spine
of the graph straight.  Nothing about the construction is proved correct
here; every attempt is certified exactly, a failed attempt is pushed through
numeric repair stages, and the layout parameters decay between retries.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graphs import BRIDGE, OTHER, BlockCutTree, Graph, block_cut_decompose, is_christmas_cactus
from .verify import Embedding, GreedyCertificate, verify_greedy

REPAIR_TAU = 1e-5  # margin level the repair pass pushes violations up to
REPAIR_ITERS = 1200  # gradient passes in one repair stage
SHRINK_FLOOR = 5e-3  # no stage may take an edge below this fraction of its
# seeded length; unbounded shrinking of deep branches pushes the layout's
# aspect ratio so high that cross-scale margins fall under the certification
# tolerance and no amount of further adjustment can recover them
BETA0 = 300.0  # initial softmin sharpness for the repair pass
BETA_GROWTH = 1.02  # per-pass sharpening factor
BETA_MAX = 3e6  # sharpness ceiling; 1/BETA_MAX is far below REPAIR_TAU


@dataclass(frozen=True)
class EmbedderParams:
    """Layout knobs; the retry loop decays wedge_shrink and arc_flatness."""

    wedge_shrink: float = 0.3
    radial_step: float = 0.25
    arc_flatness: float = 0.2
    max_retries: int = 12
    decay: float = 0.6

    def __post_init__(self) -> None:
        for name in ("wedge_shrink", "radial_step", "arc_flatness", "decay"):
            v = getattr(self, name)
            if not (0.0 < v < 1.0):
                raise ValueError(f"{name} must lie in (0, 1), got {v}")
        if self.max_retries < 0:
            raise ValueError(f"max_retries must be nonnegative, got {self.max_retries}")


@dataclass(frozen=True)
class VertexWedge:
    direction: float
    half_angle: float
    depth: int
    scale: float


@dataclass(frozen=True)
class WedgePlan:
    """Per-vertex wedge assignments; sibling wedges are disjoint by construction."""

    wedges: tuple[VertexWedge, ...]

    def __getitem__(self, v: int) -> VertexWedge:
        return self.wedges[v]

    def __len__(self) -> int:
        return len(self.wedges)


def _entry_first(cycle: tuple[int, ...], entry: int) -> list[int]:
    """Rotate a cyclic vertex order so it starts at the entry."""
    i = cycle.index(entry)
    return list(cycle[i:] + cycle[:i])


def _block_order(t: BlockCutTree) -> tuple[list[int], dict[int, int]]:
    """Blocks in breadth-first order (entries placed first) with their levels."""
    depth: dict[int, int] = {}
    order: list[int] = []
    frontier = sorted(t.child_blocks(t.root))
    for b in frontier:
        depth[b] = 1
    while frontier:
        nxt: list[int] = []
        for b in frontier:
            order.append(b)
            for v in t.blocks[b].vertices:
                if v == t.entries[b]:
                    continue
                for nb in sorted(t.child_blocks(v)):
                    depth[nb] = depth[b] + 1
                    nxt.append(nb)
        frontier = nxt
    return order, depth


def assign_wedges(t: BlockCutTree, p: EmbedderParams) -> WedgePlan:
    """Split each vertex's wedge among its child blocks per the shrink rule.

    The root owns the full plane (half-angle pi); every cutvertex divides its
    wedge equally among its child blocks and multiplies each share by
    wedge_shrink; scale contracts by radial_step per block level.  Cycle blocks
    spread their vertices over a flat arc inside the block share, each vertex
    keeping a wedge that fits strictly inside its slot, so sibling wedges never
    overlap.
    """
    for blk in t.blocks:
        if blk.kind == OTHER:
            raise ValueError("wedge assignment requires bridge and cycle blocks only")
    n = len(t.blocks_of)
    lam, rho, alpha = p.wedge_shrink, p.radial_step, p.arc_flatness
    assigned: list[VertexWedge | None] = [None] * n
    assigned[t.root] = VertexWedge(0.0, math.pi, 0, 1.0)
    order, depths = _block_order(t)
    for b in order:
        blk = t.blocks[b]
        entry = t.entries[b]
        w = assigned[entry]
        kids = t.child_blocks(entry)
        c = len(kids)
        idx = kids.index(b)
        center = w.direction - w.half_angle + (2 * idx + 1) * w.half_angle / c
        share = lam * w.half_angle / c
        d = depths[b]
        scale = w.scale * rho
        if blk.kind == BRIDGE:
            (y,) = [v for v in blk.vertices if v != entry]
            assigned[y] = VertexWedge(center, share, d, scale)
            continue
        others = _entry_first(blk.vertices, entry)[1:]
        m = len(others)
        spread = min(4.0 * alpha * share, 1.8 * share, 2.0 * math.pi * m / (m + 1))
        sigma = 1.0 if d % 2 == 0 else -1.0
        step = spread / (m - 1)
        for i, y in enumerate(others, start=1):
            psi = sigma * (-spread / 2.0 + (i - 1) * step)
            phi = lam * min(step / 2.0, share - abs(psi))
            assigned[y] = VertexWedge(center + psi, phi, d, scale)
    return WedgePlan(tuple(assigned))


@dataclass(frozen=True)
class EmbedResult:
    embedding: Embedding
    retries: int
    certificate: GreedyCertificate


def _cycle_angles(m: int, rsub: list[float]) -> list[float]:
    """Angular positions on the circle for the m non-entry vertices.

    rsub[i] is the radius of the branch hanging at vertex i (0 if bare).
    Branch-bearing vertices claim wide arcs and bare runs squeeze together;
    the deepest branch is then shifted to the point opposite the entry, so
    the main spine of the graph continues straight and child frames do not
    rotate level after level.
    """
    need = [1.0 if r > 0.0 else 0.3 for r in rsub]
    gaps = [0.5 * (a + b) for a, b in zip([1.0] + need, need + [1.0])]
    total = sum(gaps)
    theta = []
    acc = 0.0
    for gp in gaps[:-1]:
        acc += gp
        theta.append(2.0 * math.pi * acc / total)
    occupied = [i for i, r in enumerate(rsub) if r > 0.0]
    if occupied:
        h = max(occupied, key=lambda i: rsub[i])
        th = theta[h]
        lo, hi = math.pi / th, (2.0 * math.pi - math.pi) / (2.0 * math.pi - th)
        theta = [
            a * lo if a <= th else 2.0 * math.pi - (2.0 * math.pi - a) * hi
            for a in theta
        ]
    return theta


def _place(
    g: Graph, t: BlockCutTree, lam: float, alpha: float, rho: float = 0.25
) -> list[tuple[float, float]]:
    """Constructive seed layout over the block-cut tree.

    Every cycle sits on a circle hanging below its entry, and every branch
    hangs along the chord ray from the block entry through its anchor vertex.
    Chord rays fan out from a common apex, so sibling branches diverge
    instead of colliding, and a branch scale is capped so its whole subtree
    fits in a disk that stays clear of the neighbouring chords and strictly
    below the entry.  Bridges step straight down without shrinking, which
    keeps long paths at a constant edge length.  lam and alpha set the
    clearance fractions and rho the bridge hop; retries shrink all three,
    pulling branches tighter.
    """
    n = g.vertex_count
    hop = 2.4 * rho  # bridge edge length relative to the entry's scale
    order, depth = _block_order(t)
    nblk = len(t.blocks)
    frac = [1.0] * nblk  # block scale relative to its entry vertex's scale
    reachblk = [0.0] * nblk  # subtree radius around the entry, block scale units
    hang = [0.0] * n  # radius of the branch hanging at a vertex, own scale units
    thetas: dict[int, list[float]] = {}
    for b in reversed(order):
        blk = t.blocks[b]
        entry = t.entries[b]
        if blk.kind == BRIDGE:
            (y,) = [v for v in blk.vertices if v != entry]
            for cb in t.child_blocks(y):
                frac[cb] = 1.0
                hang[y] = reachblk[cb]
            reachblk[b] = hop + hang[y]
            continue
        others = _entry_first(blk.vertices, entry)[1:]
        m = len(others)
        kid = [next(iter(t.child_blocks(y)), -1) for y in others]
        theta = _cycle_angles(m, [reachblk[cb] if cb >= 0 else 0.0 for cb in kid])
        thetas[b] = theta
        # chordwise distance between vertices at angles a and b on the
        # circle, and depth below the entry horizontal, both in scale units
        chord = lambda a, bb: abs(math.sin(0.5 * (a - bb)))
        occupied = [i for i in range(m) if kid[i] >= 0]
        for i in occupied:
            r = reachblk[kid[i]]
            near = min(
                (chord(theta[i], theta[j]) for j in occupied if j != i),
                default=math.inf,
            )
            near = min(near, chord(theta[i], 0.0))
            deep = 0.5 * (1.0 - math.cos(theta[i]))
            f = min(1.75 * alpha * near / r, 0.8 * deep / r, 4.0 * lam)
            frac[kid[i]] = f
            hang[others[i]] = f * r
        reachblk[b] = max(
            chord(theta[i], 0.0) + hang[y] for i, y in enumerate(others)
        )
    pos: list[tuple[float, float]] = [(0.0, 0.0)] * n
    ray = [0.0] * n
    scale = [1.0] * n
    root_kids = t.child_blocks(t.root)
    if len(root_kids) == 2:
        # give each root block its own half plane, left and right
        ray[t.root] = math.pi
    else:
        ray[t.root] = -0.5 * math.pi
    for b in order:
        blk = t.blocks[b]
        entry = t.entries[b]
        ex, ey = pos[entry]
        axis = ray[entry]
        if entry == t.root and root_kids.index(b) == 1:
            axis = 0.0
        s = frac[b] * scale[entry]
        if blk.kind == BRIDGE:
            (y,) = [v for v in blk.vertices if v != entry]
            e = hop * s
            pos[y] = (ex + e * math.cos(axis), ey + e * math.sin(axis))
            ray[y] = axis
            scale[y] = s
            continue
        others = _entry_first(blk.vertices, entry)[1:]
        sign = 1.0 if depth[b] % 2 else -1.0  # alternate winding per level
        r = 0.5 * s
        cx, cy = ex + r * math.cos(axis), ey + r * math.sin(axis)
        base = axis + math.pi  # the entry sits at the top of the circle
        for i, y in enumerate(others):
            beta = base + sign * thetas[b][i]
            pos[y] = (cx + r * math.cos(beta), cy + r * math.sin(beta))
            ray[y] = math.atan2(pos[y][1] - ey, pos[y][0] - ex)
            scale[y] = s
    return pos


def _place_ring(
    g: Graph, t: BlockCutTree, lam: float, alpha: float, rho: float
) -> list[tuple[float, float]]:
    """Arc seed layout: depth-first angular slices over one common circle.

    Vertices sit on an arc shorter than half a turn, ordered by a traversal
    of the block-cut tree that keeps every subtree in a contiguous slice
    strictly beyond its entry vertex, with unoccupied guard gaps between
    consecutive slices.  Stepping along the circle then always shortens the
    chord to any target further along, so every edge that advances the arc
    stays useful at every depth.  Cycles advance vertex by vertex and close
    with a chord back to the entry; maximal bridge chains are flattened into
    one evenly spaced run so path-like graphs keep constant hops instead of
    shrinking geometrically.  A trailing run of childless vertices gets no
    angle at all: it climbs radially outward above the last slice vertex
    that still grows, each rung a little further from everything else, so
    runs route every outside target by stepping back down.  In particular a
    lone pendant sits straight above its parent, and the bisector of that
    edge leaves the entire layout on the parent's side.  lam widens slice
    content at the expense of the guards and rho scales ladder height;
    both decay across retries toward more conservative layouts.
    """
    n = g.vertex_count
    F = min(0.7, 0.2 + 1.2 * lam)  # content fraction of every slice
    kap = 0.08 * rho  # ladder height, fraction of squared local width
    order, _ = _block_order(t)
    below_b = [0] * len(t.blocks)  # vertices below each block, minus its entry
    for b in reversed(order):
        tot = 0
        for v in t.blocks[b].vertices:
            if v != t.entries[b]:
                tot += 1 + sum(below_b[cb] for cb in t.child_blocks(v))
        below_b[b] = tot
    phi = [0.0] * n
    rad = [1.0] * n

    def below_v(v: int) -> int:
        return sum(below_b[cb] for cb in t.child_blocks(v))

    def fill(
        v: int,
        a0: float,
        W: float,
        sgn: float,
        only: list[int] | None = None,
        opened: bool = False,
        need_fwd: bool = True,
    ) -> None:
        kids = t.child_blocks(v) if only is None else only
        shares = [1 + below_b[b] for b in kids]
        stot = sum(shares)
        acc = a0
        for i, (b, sh) in enumerate(zip(kids, shares)):
            Wb = W * sh / stot
            blk = t.blocks[b]
            ob = opened and i == len(kids) - 1  # slice runs to the sweep's end
            if blk.kind == BRIDGE:
                # flatten the maximal chain of bridges into one run; in the
                # flattened view only the final vertex can still carry weight
                items = []
                head, cur = v, b
                while True:
                    (y,) = [u for u in t.blocks[cur].vertices if u != head]
                    items.append(y)
                    nxt = t.child_blocks(y)
                    if len(nxt) == 1 and t.blocks[nxt[0]].kind == BRIDGE:
                        head, cur = y, nxt[0]
                    else:
                        break
                grow = [False] * (len(items) - 1) + [bool(t.child_blocks(items[-1]))]
            else:
                items = _entry_first(blk.vertices, t.entries[b])[1:]
                grow = [bool(t.child_blocks(c)) for c in items]
                wf = below_v(items[0]) if grow[0] else -1
                wl = below_v(items[-1]) if grow[-1] else -1
                if wf > wl:
                    # run the cycle the other way round, so the heavy end
                    # comes last and light subtrees stay interior
                    items.reverse()
                    grow.reverse()
            # trailing childless vertices recede radially instead of using
            # angle: every far target is then reached by stepping back down.
            # At the sweep's end there is nothing further to reach, so the
            # run may stay on the arc; a vertex with no onward cycle edge
            # keeps the head of its first block on the arc instead.
            cut = len(items)
            keep = 0
            if not ob:
                keep = 1 if i == 0 and need_fwd else 0
                while cut > keep and not grow[cut - 1]:
                    cut -= 1
            arc, run = items[:cut], items[cut:]
            weights = [1 + (below_v(c) if gr else 0) for c, gr in zip(arc, grow)]
            unit = Wb / (1 + sum(weights))  # the leading unit clears the entry
            pos = acc + sgn * unit
            base_ang, base_rad = phi[v], rad[v]
            for j, (c, wi, gr) in enumerate(zip(arc, weights, grow)):
                if j == 0 and keep == 1 and not gr:
                    # a forced childless head cannot reach past the slice, so
                    # keep it a sliver ahead of the entry; its deficit toward
                    # far targets then shrinks with the sliver
                    phi[c], rad[c] = acc + sgn * unit * 1e-4, 1.0
                    base_ang, base_rad = phi[c], 1.0
                else:
                    phi[c], rad[c] = pos, 1.0
                    base_ang, base_rad = pos, 1.0
                    if gr:
                        last = j == len(arc) - 1
                        fill(
                            c,
                            pos,
                            F * unit * wi,
                            sgn,
                            opened=ob and last and not run,
                            need_fwd=last,
                        )
                pos += sgn * unit * wi
            if run:
                rung = kap * Wb * Wb / len(run)
                seq = run
                if arc and grow[cut - 1]:
                    # the last arc vertex carries a subtree whose towers own
                    # its angle; climb above the entry instead, entering the
                    # run through the cycle's closing edge
                    base_ang, base_rad = phi[v], rad[v]
                    seq = run[::-1]
                h = base_rad
                for c in seq:
                    h += rung
                    phi[c], rad[c] = base_ang, h
            acc += sgn * Wb

    kids = t.child_blocks(t.root)
    span = 2.6  # under half a turn, so chords shorten along every slice
    if len(kids) == 2:
        # sweep one root block counterclockwise and the other clockwise;
        # both sweeps then end in open arc, and the root sits between them
        w0, w1 = (1 + below_b[b] for b in kids)
        split = span * w0 / (w0 + w1)
        fill(t.root, 0.0, split, 1.0, only=[kids[0]], opened=True)
        fill(t.root, 0.0, span - split, -1.0, only=[kids[1]], opened=True)
    else:
        fill(t.root, 0.0, span, 1.0, opened=True)
    return [(r * math.cos(a), r * math.sin(a)) for a, r in zip(phi, rad)]


_CONE_TRACE: list = []


def _place_cone(
    g: Graph, t: BlockCutTree, lam: float, alpha: float, rho: float
) -> list[tuple[float, float]]:
    """Recursive cluster layout: every subtree fills a small blob aimed at
    open space.

    The graph is laid out top down, so whenever a subtree is about to be
    placed, everything coarser already has coordinates.  Its axis is chosen
    by scanning for the direction, closest to the parent's own axis, that
    keeps every vertex placed so far (and the forecast footprint of sibling
    subtrees still pending) strictly behind the blob; stepping from any blob
    point back to its anchor then approaches every outside target.  Bridge
    chains flatten into straight ladders along that axis.  A cycle climbs
    out of its entry along a spiral arc whose radii grow by a fixed factor
    per member while the angles fan across the axis; strictly graded radii
    mean no two members ever straddle a shared radius, so the curve itself
    routes between members, and the outermost member closes back to the
    entry in one long chord.  Members carrying subtrees get the widest
    angular berth, and heavier subtrees go to the outer end where spacing is
    largest.  lam sizes child blobs against member clearance, alpha widens
    the fan and rho sets the reach of ladders and spirals; retries shrink
    all three toward sparser layouts.
    """
    n = g.vertex_count
    if n == 1:
        return [(0.0, 0.0)]
    nu = 0.35 + 0.5 * alpha  # fan half-angle of a cycle's spiral arc
    Bf = 0.2 + 0.6 * lam  # child blob over local member clearance
    Lf = 0.2 + 1.6 * rho  # reach of ladders and spiral tips
    pos: list[tuple[float, float]] = [(0.0, 0.0)] * n
    placed = [False] * n
    placed[t.root] = True
    virtuals: dict[int, tuple[float, float]] = {}  # forecast tips of pending blobs

    weight_memo: dict[int, int] = {}

    def weight(v: int) -> int:
        # vertices hanging strictly below v in the block-cut tree
        if v not in weight_memo:
            w = 0
            for b in t.child_blocks(v):
                for u in t.blocks[b].vertices:
                    if u != v:
                        w += 1 + weight(u)
            weight_memo[v] = w
        return weight_memo[v]

    def clear_axis(cx: float, cy: float, want: float, s_fwd: float) -> float:
        """Direction nearest `want` along which a blob whose first steps have
        size s_fwd can hang at (cx, cy).

        A step of size s back toward the anchor still gains on a target at
        distance h up to cos = s/2h ahead of the axis, so nearby obstacles
        (curve neighbors a pendant's length away) leave real forward room
        while far ones force the strict rear half-plane."""
        cons = []
        for w in range(n):
            if placed[w]:
                dx, dy = pos[w][0] - cx, pos[w][1] - cy
                h = math.hypot(dx, dy)
                if h > 1e-12:
                    cons.append(
                        (dx / h, dy / h, min(0.2, 0.7 * s_fwd / (2.0 * h) - 0.05))
                    )
        for vx, vy in virtuals.values():
            dx, dy = vx - cx, vy - cy
            h = math.hypot(dx, dy)
            if h > 1e-12:
                cons.append(
                    (dx / h, dy / h, min(0.2, 0.7 * s_fwd / (2.0 * h) - 0.05))
                )
        best_a, best_worst = want, math.inf
        for j in range(121):
            off = ((j + 1) // 2) * (math.pi / 60.0) * (1 if j % 2 else -1)
            a = want + off
            ca, sa = math.cos(a), math.sin(a)
            worst = max((ca * ux + sa * uy - lim for ux, uy, lim in cons), default=-1.0)
            if worst < 0.0:
                _CONE_TRACE.append((cx, cy, want, a, worst, True))
                return a
            if worst < best_worst:
                best_a, best_worst = a, worst
        _CONE_TRACE.append((cx, cy, want, best_a, best_worst, False))
        return best_a

    def first_step(c: int, Sc: float) -> float:
        """Size of the first edge the subtree at c will lay down at scale Sc."""
        (b,) = t.child_blocks(c)
        blk = t.blocks[b]
        if blk.kind == BRIDGE:
            ln, head, cur = 0, c, b
            while True:
                (y,) = [u for u in t.blocks[cur].vertices if u != head]
                ln += 1
                nxt = t.child_blocks(y)
                if len(nxt) == 1 and t.blocks[nxt[0]].kind == BRIDGE:
                    head, cur = y, nxt[0]
                else:
                    break
            return Lf * Sc / ln
        m = len(blk.vertices) - 1
        if m < 2:
            return Lf * Sc
        q = min(1.6, (1.0 / 0.15) ** (1.0 / (m - 1)))
        return Lf * Sc * (1.0 - 1.0 / q)

    def fill(v: int, x0: float, y0: float, ang: float, S: float) -> None:
        kids = t.child_blocks(v)
        if not kids:
            return
        axes = [ang] if len(kids) == 1 else [ang, ang + math.pi]
        for b, want in zip(kids, axes):
            blk = t.blocks[b]
            if blk.kind == BRIDGE:
                # flatten the maximal bridge chain into one straight ladder;
                # only its final vertex can carry further structure
                items = []
                head, cur = v, b
                while True:
                    (y,) = [u for u in t.blocks[cur].vertices if u != head]
                    items.append(y)
                    nxt = t.child_blocks(y)
                    if len(nxt) == 1 and t.blocks[nxt[0]].kind == BRIDGE:
                        head, cur = y, nxt[0]
                    else:
                        break
                reach = Lf * S
                step = reach / len(items)
                bang = clear_axis(x0, y0, want, step)
                ca, sa = math.cos(bang), math.sin(bang)
                for j, c in enumerate(items, 1):
                    pos[c] = (x0 + j * step * ca, y0 + j * step * sa)
                    placed[c] = True
                tail = items[-1]
                if t.child_blocks(tail):
                    fill(tail, *pos[tail], bang, (S - reach) * 0.7)
            else:
                members = _entry_first(blk.vertices, t.entries[b])[1:]
                m = len(members)
                if sum(weight(c) * i for i, c in enumerate(members)) < sum(
                    weight(c) * (m - 1 - i) for i, c in enumerate(members)
                ):
                    members.reverse()  # heavy subtrees toward the outer end
                L = Lf * S
                nu_b = 1.1 if v == t.root else nu  # nothing behind the root
                q = (1.0 / 0.15) ** (1.0 / (m - 1)) if m > 1 else 1.0
                q = min(1.6, q)
                # the outer member's descent along the curve is the cycle's
                # smallest forward step against targets ahead of it
                bang = clear_axis(x0, y0, want, L * (1.0 - 1.0 / q) if m > 1 else L)
                grow = [bool(t.child_blocks(c)) for c in members]
                # wide berth around subtree members keeps their blobs clear
                gw = [2.0] + [3.0 if gr else 1.0 for gr in grow] + [2.0]
                gaps = [0.5 * (gw[i] + gw[i + 1]) for i in range(m + 1)]
                tot = sum(gaps)
                pts = []
                acc = 0.0
                for i in range(m):
                    acc += gaps[i]
                    th = nu_b * (2.0 * acc / tot - 1.0)
                    r = L * q ** (i + 1 - m)
                    pts.append(
                        (x0 + r * math.cos(bang + th), y0 + r * math.sin(bang + th))
                    )
                for c, p in zip(members, pts):
                    pos[c] = p
                    placed[c] = True
                plans = []
                for j, (c, gr) in enumerate(zip(members, grow)):
                    if not gr:
                        continue
                    ax, ay = pts[j - 1] if j else (x0, y0)
                    dx, dy = pts[j + 1] if j + 1 < m else (x0, y0)
                    gap = min(math.dist(pts[j], (ax, ay)), math.dist(pts[j], (dx, dy)))
                    Sc = Bf * gap
                    px, py = pts[j]
                    a_c = clear_axis(px, py, bang, first_step(c, Sc))
                    virtuals[c] = (
                        px + 1.5 * Lf * Sc * math.cos(a_c),
                        py + 1.5 * Lf * Sc * math.sin(a_c),
                    )
                    plans.append((c, px, py, a_c, Sc))
                for c, px, py, a_c, Sc in plans:
                    # drop the forecast before the real content goes in
                    virtuals.pop(c, None)
                    fill(c, px, py, a_c, Sc)

    fill(t.root, 0.0, 0.0, 0.0, 1.0)
    return pos


def _repair(
    g: Graph,
    pts: list[tuple[float, float]],
    iters: int,
    floor: np.ndarray | None = None,
) -> list[tuple[float, float]]:
    """Lift the worst relative margins of a near-greedy layout above REPAIR_TAU.

    Ascends a softmin of all ordered-pair margins whose sharpness anneals
    upward, so gradient mass concentrates on the worst pairs while near-worst
    pairs still trade slack instead of blocking progress.  The argmin neighbor
    of every pair is refreshed each pass; steps are clipped per point against
    its shortest incident edge so local structure survives.  When progress
    stalls the state rewinds to the best layout seen, the anneal restarts and
    the step clip loosens, so offenders that must travel many of their own
    edge lengths eventually can.  Deterministic; returns the best points seen
    without certifying them.
    """
    P = np.asarray(pts, dtype=float).copy()
    n = len(P)
    if n <= 2 or not g.edges:
        return pts
    adj = g.adjacency()
    deg = max(len(nb) for nb in adj)
    # neighbor table padded with self; the self column is masked to inf below
    nbrs = np.array([nb + [s] * (deg - len(nb)) for s, nb in enumerate(adj)], dtype=int)
    erow = np.array([e[0] for e in g.edges], dtype=int)
    ecol = np.array([e[1] for e in g.edges], dtype=int)
    rows = np.arange(n)
    pad = nbrs == rows[:, None]
    d0 = P[erow] - P[ecol]
    efloor = floor if floor is not None else 0.2 * np.sqrt((d0 * d0).sum(-1))
    best_P = P.copy()
    stall, best_seen = 0, -math.inf
    beta = BETA0
    bold = 1.0
    for _ in range(iters):
        diff = P[:, None, :] - P[None, :, :]
        dist = np.sqrt((diff * diff).sum(-1))
        cand = dist[nbrs, :]
        cand[pad] = math.inf
        pick = np.argmin(cand, axis=1)
        best = np.take_along_axis(cand, pick[:, None, :], axis=1)[:, 0, :]
        with np.errstate(divide="ignore", invalid="ignore"):
            marg = (dist - best) / dist
        np.fill_diagonal(marg, math.inf)
        minm = float(marg.min())
        if not math.isfinite(minm) or minm > 0.5 * REPAIR_TAU:
            return [(float(x), float(y)) for x, y in P]
        if minm > best_seen + 1e-12:
            best_seen, stall = minm, 0
            bold = 1.0
            np.copyto(best_P, P)
        else:
            stall += 1
            if stall > 200:
                # rewind to the best layout seen, soften the softmin and take
                # bolder steps; the changed dynamics often slip past the
                # equilibrium that stalled the previous anneal
                np.copyto(P, best_P)
                beta = BETA0
                stall = 0
                bold = min(6.0, 1.5 * bold)
        w = np.exp(-beta * (marg - minm))
        w /= w.sum()
        vs, vt = np.nonzero(w > 1e-12)
        r = w[vs, vt]
        vb = nbrs[vs, pick[vs, vt]]
        dbv, dsv = dist[vb, vt], dist[vs, vt]
        c1 = r / (dbv * dsv)
        c2 = r * dbv / (dsv**3)
        vtb = P[vt] - P[vb]
        vst = P[vs] - P[vt]
        grad = np.zeros_like(P)
        np.add.at(grad, vb, c1[:, None] * vtb)
        np.add.at(grad, vs, c2[:, None] * vst)
        np.add.at(grad, vt, -c1[:, None] * vtb - c2[:, None] * vst)
        elen = dist[erow, ecol]
        shortest = np.full(n, math.inf)
        np.minimum.at(shortest, erow, elen)
        np.minimum.at(shortest, ecol, elen)
        # a floor on the clip keeps points with microscopic edges mobile
        lead = np.maximum(shortest, 0.3 * float(np.median(elen)))
        gn = np.sqrt((grad * grad).sum(-1))
        frac = min(0.05, max(1e-4, 5.0 * (REPAIR_TAU - minm)))
        safe = np.where(gn > 0.0, gn, 1.0)
        step = np.minimum(1.0, bold * frac * lead / safe)
        P += step[:, None] * grad
        # an edge collapsing to a point would fake margins of exactly zero
        # for every pair routed through it; push such edges back apart
        cur = P[erow] - P[ecol]
        clen = np.sqrt((cur * cur).sum(-1))
        tight = clen < efloor
        if np.any(tight):
            stretch = np.where(
                tight, 0.5 * (efloor - clen) / np.maximum(clen, 1e-12 * efloor), 0.0
            )
            push = cur * stretch[:, None]
            np.add.at(P, erow, push)
            np.add.at(P, ecol, -push)
        beta = min(BETA_MAX, beta * BETA_GROWTH)
    return [(float(x), float(y)) for x, y in best_P]


def _polish(
    g: Graph,
    pts: list[tuple[float, float]],
    rounds: int,
    floor: np.ndarray | None = None,
) -> list[tuple[float, float]]:
    """Pattern-search ascent on the exact minimum relative margin.

    Moves one vertex at a time by a shrinking compass step, accepting the
    single best move per round; candidates are the vertices of the currently
    worst pairs.  No smoothing and no step clipping, so it walks out of the
    nonsmooth equilibria where the softmin ascent stalls, but it is only
    effective once violations are few.  Deterministic.
    """
    P = np.asarray(pts, dtype=float).copy()
    n = len(P)
    if n <= 2 or not g.edges:
        return pts
    adj = g.adjacency()
    deg = max(len(nb) for nb in adj)
    nbrs = np.array([nb + [s] * (deg - len(nb)) for s, nb in enumerate(adj)], dtype=int)
    rows = np.arange(n)
    pad = nbrs == rows[:, None]
    diff = P[:, None, :] - P[None, :, :]
    dist = np.sqrt((diff * diff).sum(-1))

    def row_margin(s: int, x: int, xrow: np.ndarray) -> np.ndarray:
        """Margins from source s with vertex x's distance row overridden."""
        cnd = dist[nbrs[s], :].copy()
        for j, v in enumerate(nbrs[s]):
            if v == x:
                cnd[j, :] = xrow
        cnd[pad[s], :] = math.inf
        drow = xrow if s == x else dist[s]
        with np.errstate(divide="ignore", invalid="ignore"):
            m = (drow - cnd.min(axis=0)) / drow
        m[s] = math.inf
        return m

    def col_margin(x: int, xrow: np.ndarray) -> np.ndarray:
        """Margins of every source toward target x after moving x."""
        cnd = xrow[nbrs]
        cnd = np.where(pad, math.inf, cnd)
        with np.errstate(divide="ignore", invalid="ignore"):
            m = (xrow - cnd.min(axis=1)) / xrow
        m[x] = math.inf
        return m

    margins = np.empty((n, n))
    for s in range(n):
        margins[s] = row_margin(s, -1, dist[0])
    elen = np.array([dist[a, b] for a, b in g.edges])
    med = float(np.median(elen))
    h = 0.25 * med
    # no move may shrink an incident edge below its floor, else collapsing
    # an edge fakes margins of zero for every pair routed through it
    if floor is None:
        efloor = [0.2 * dist[x, adj[x]] for x in range(n)]
    else:
        fmap = {}
        for (a, b), fl in zip(g.edges, floor):
            fmap[a, b] = fmap[b, a] = fl
        efloor = [np.array([fmap[x, v] for v in adj[x]]) for x in range(n)]
    dirs = [
        (1.0, 0.0), (-1.0, 0.0), (0.0, 1.0), (0.0, -1.0),
        (0.7071067811865476, 0.7071067811865476),
        (-0.7071067811865476, 0.7071067811865476),
        (0.7071067811865476, -0.7071067811865476),
        (-0.7071067811865476, -0.7071067811865476),
    ]
    for _ in range(rounds):
        minm = float(margins.min())
        if minm > 0.5 * REPAIR_TAU:
            break
        order = np.argsort(margins, axis=None)[:8]
        active: set[int] = set()
        for idx in order:
            s, t = divmod(int(idx), n)
            active.add(s)
            active.add(t)
            cnd = dist[nbrs[s], t].copy()
            cnd[pad[s]] = math.inf
            active.add(int(nbrs[s][int(np.argmin(cnd))]))
        move = None
        gain = minm
        for x in sorted(active):
            touched = {x, *adj[x]}
            tmp = margins.copy()
            tmp[sorted(touched), :] = math.inf
            tmp[:, x] = math.inf
            rest = float(tmp.min())
            for dx, dy in dirs:
                q = P[x] + (h * dx, h * dy)
                xrow = np.sqrt(((P - q) ** 2).sum(-1))
                xrow[x] = 0.0
                if float(np.min(xrow[rows != x])) <= 0.0:
                    continue
                if np.any(xrow[adj[x]] < efloor[x]):
                    continue
                trial = min(rest, float(col_margin(x, xrow).min()))
                for s in sorted(touched):
                    trial = min(trial, float(row_margin(s, x, xrow).min()))
                    if trial <= gain:
                        break
                if trial > gain:
                    gain, move = trial, (x, q, xrow)
        if move is None:
            h *= 0.5
            if h < 1e-6 * med:
                break
            continue
        x, q, xrow = move
        P[x] = q
        dist[x, :] = xrow
        dist[:, x] = xrow
        for s in sorted({x, *adj[x]}):
            margins[s] = row_margin(s, -1, xrow)
        margins[:, x] = col_margin(x, xrow)
        for s in sorted({x, *adj[x]}):
            margins[s, s] = math.inf
    return [(float(x), float(y)) for x, y in P]


def _lpstep(
    g: Graph,
    pts: list[tuple[float, float]],
    rounds: int,
    floor: np.ndarray | None = None,
) -> list[tuple[float, float]]:
    """Joint displacement of all vertices via successive linear programming.

    At an interlocked plateau every single-vertex move worsens some pair, and
    escaping takes a coordinated motion of many vertices at once.  Each round
    linearizes the margin of every near-worst pair in all three of its vertex
    positions and solves the Chebyshev step problem: maximize the worst
    linearized margin over displacement fields inside a per-vertex trust box
    tied to the shortest incident edge.  The step is backtracked until the
    exact minimum margin improves; monotone acceptance means the active set
    cannot cycle.  Deterministic.
    """
    P = np.asarray(pts, dtype=float).copy()
    n = len(P)
    if n <= 2 or not g.edges:
        return pts
    from scipy.optimize import linprog  # deferred; only hard instances get here

    adj = g.adjacency()
    deg = max(len(nb) for nb in adj)
    nbrs = np.array([nb + [s] * (deg - len(nb)) for s, nb in enumerate(adj)], dtype=int)
    rows = np.arange(n)
    pad = nbrs == rows[:, None]
    erow = np.array([e[0] for e in g.edges], dtype=int)
    ecol = np.array([e[1] for e in g.edges], dtype=int)

    def margins(Q: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
        diff = Q[:, None, :] - Q[None, :, :]
        dist = np.sqrt((diff * diff).sum(-1))
        cnd = np.where(pad[:, :, None], math.inf, dist[nbrs])
        with np.errstate(divide="ignore", invalid="ignore"):
            marg = (dist - cnd.min(axis=1)) / dist
        np.fill_diagonal(marg, math.inf)
        return dist, marg, cnd.argmin(axis=1)

    dist, marg, bidx = margins(P)
    m0 = float(marg.min())
    best, mbest = P.copy(), m0
    shrink = 1.0
    for _ in range(rounds):
        if m0 > 2.0 * REPAIR_TAU:
            break
        # trust box per vertex, a fraction of its shortest incident edge so
        # no step can collapse an edge outright
        h = shrink * np.array([0.2 * dist[x, adj[x]].min() for x in range(n)])
        # model a band reaching twice as high as the worst level, so pairs
        # just above the plateau are defended instead of run over
        cut = max(2.0 * REPAIR_TAU, 2.0 * abs(m0))
        flat = np.argsort(marg, axis=None)
        rows_a, rhs = [], []
        for idx in flat[:800]:
            s, t = divmod(int(idx), n)
            f = marg[s, t]
            if f >= cut:
                break
            v = int(nbrs[s][bidx[s, t]])
            dst, dvt = dist[s, t], dist[v, t]
            est = (P[s] - P[t]) / dst
            evt = (P[v] - P[t]) / dvt
            grad = {
                s: (dvt / dst**2) * est,
                v: -evt / dst,
                t: evt / dst - (dvt / dst**2) * est,
            }
            row = np.zeros(2 * n + 1)
            row[-1] = 1.0
            for a, ga in grad.items():
                row[2 * a : 2 * a + 2] -= ga
            rows_a.append(row)
            rhs.append(f)
        if not rows_a:
            break
        cost = np.zeros(2 * n + 1)
        cost[-1] = -1.0
        bounds = [b for hx in h for b in ((-hx, hx), (-hx, hx))] + [(None, None)]
        res = linprog(cost, A_ub=np.array(rows_a), b_ub=np.array(rhs), bounds=bounds, method="highs")
        if not res.success or res.x[-1] <= m0:
            break
        d = res.x[:-1].reshape(n, 2)
        took = False
        for eta in (1.0, 0.5, 0.25, 0.1):
            cand_dist, cand_marg, cand_bidx = margins(P + eta * d)
            cand = float(cand_marg.min())
            if floor is not None and np.any(cand_dist[erow, ecol] < floor):
                continue
            if cand > m0:
                P = P + eta * d
                dist, marg, bidx = cand_dist, cand_marg, cand_bidx
                m0 = cand
                shrink = min(1.0, shrink * (1.3 if eta == 1.0 else 1.0))
                took = True
                break
        if not took:
            shrink *= 0.4
            if shrink < 1e-3:
                break
        if m0 > mbest:
            best, mbest = P.copy(), m0
    return [(float(x), float(y)) for x, y in best]


def _block_subtrees(t: BlockCutTree) -> list[tuple[int, tuple[int, ...]]]:
    """Anchor vertex and the full vertex set hanging below it, per block."""
    order, _ = _block_order(t)
    below: list[set[int]] = [set() for _ in t.blocks]
    for b in reversed(order):
        s = below[b]
        for v in t.blocks[b].vertices:
            if v == t.entries[b]:
                continue
            s.add(v)
            for cb in t.child_blocks(v):
                s |= below[cb]
    return [(t.entries[b], tuple(sorted(below[b]))) for b in order]


SWAY_OPS: list[tuple[str, float]] = [
    ("rot", a) for d in (0.009, 0.026, 0.07, 0.175, 0.44) for a in (d, -d)
] + [("scl", f) for f in (0.92, 0.8, 0.65, 1.1)]


def _sway(
    g: Graph,
    t: BlockCutTree,
    pts: list[tuple[float, float]],
    rounds: int,
    floor: np.ndarray | None = None,
) -> list[tuple[float, float]]:
    """Rigid branch moves on the exact minimum relative margin.

    Rotates or rescales whole hanging subtrees about their anchor vertex,
    keeping every accepted move that lifts the worst margin.  A branch move
    shifts all the margins of an interlocked violation cluster at once, which
    is how layouts escape the equilibria where single-vertex moves stall.
    Only branches containing a vertex of a currently worst pair are tried.
    """
    P = np.asarray(pts, dtype=float).copy()
    n = len(P)
    if n <= 2 or not g.edges:
        return pts
    adj = g.adjacency()
    deg = max(len(nb) for nb in adj)
    nbrs = np.array([nb + [s] * (deg - len(nb)) for s, nb in enumerate(adj)], dtype=int)
    pad = nbrs == np.arange(n)[:, None]
    erow = np.array([e[0] for e in g.edges], dtype=int)
    ecol = np.array([e[1] for e in g.edges], dtype=int)

    def margins_of(Q: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        diff = Q[:, None, :] - Q[None, :, :]
        dist = np.sqrt((diff * diff).sum(-1))
        cnd = np.where(pad[:, :, None], math.inf, dist[nbrs])
        with np.errstate(divide="ignore", invalid="ignore"):
            marg = (dist - cnd.min(axis=1)) / dist
        np.fill_diagonal(marg, math.inf)
        return marg, cnd.argmin(axis=1)

    def margin_min(Q: np.ndarray) -> float:
        marg, _ = margins_of(Q)
        m = float(marg.min())
        return m if math.isfinite(m) else -math.inf

    def worst_vertices(Q: np.ndarray, k: int) -> set[int]:
        marg, best = margins_of(Q)
        out: set[int] = set()
        for idx in np.argsort(marg, axis=None)[:k]:
            s, tt = divmod(int(idx), n)
            out.update((s, tt, int(nbrs[s][best[s, tt]])))
        return out

    subtrees = [(a, np.array(S, dtype=int)) for a, S in _block_subtrees(t) if S]
    owner: list[list[int]] = [[] for _ in range(n)]
    for bid, (a, S) in enumerate(subtrees):
        owner[a].append(bid)  # moving the branch also re-aims the anchor's edges
        for v in S:
            owner[v].append(bid)
    cur = margin_min(P)
    for _ in range(rounds):
        if cur > 0.5 * REPAIR_TAU:
            break
        cands = sorted({bid for v in worst_vertices(P, 4) for bid in owner[v]})
        move = None
        gain = cur
        for bid in cands:
            a, S = subtrees[bid]
            ax, ay = P[a]
            rel = P[S] - (ax, ay)
            for kind, val in SWAY_OPS:
                Q = P.copy()
                if kind == "rot":
                    c, sn = math.cos(val), math.sin(val)
                    Q[S, 0] = ax + c * rel[:, 0] - sn * rel[:, 1]
                    Q[S, 1] = ay + sn * rel[:, 0] + c * rel[:, 1]
                else:
                    Q[S] = (ax, ay) + val * rel
                if kind == "scl" and floor is not None:
                    el = np.sqrt(((Q[erow] - Q[ecol]) ** 2).sum(-1))
                    if np.any(el < floor):
                        continue
                m = margin_min(Q)
                if m > gain:
                    gain, move = m, Q
        if move is None:
            break
        P, cur = move, gain
    return [(float(x), float(y)) for x, y in P]


def _graph_center(g: Graph) -> int:
    """Vertex of minimum eccentricity, smallest index on ties."""
    adj = g.adjacency()
    n = g.vertex_count
    best, best_e = 0, math.inf
    for s in range(n):
        seen = [False] * n
        seen[s] = True
        frontier = [s]
        e = 0
        while frontier:
            nxt = []
            for x in frontier:
                for y in adj[x]:
                    if not seen[y]:
                        seen[y] = True
                        nxt.append(y)
            if nxt:
                e += 1
            frontier = nxt
        if e < best_e:
            best, best_e = s, e
    return best


def _rebase(pts: list[tuple[float, float]], root: int) -> list[tuple[float, float]]:
    """Translate so the requested root sits at the origin."""
    x0, y0 = pts[root]
    if x0 == 0.0 and y0 == 0.0:
        return pts
    return [(x - x0, y - y0) for x, y in pts]


def embed_christmas_cactus(
    g: Graph, p: EmbedderParams = EmbedderParams(), root: int = 0
) -> EmbedResult:
    """Lay out a Christmas cactus and certify the result, retrying with decay.

    Returns the first certified embedding together with the number of retries
    spent; the requested root always ends up at the origin.  Retries decay
    the arc and shrink parameters and also cycle the internal layout root
    through a few central vertices, which diversifies the seeds far more than
    the decay alone.  Raises if the graph is not a Christmas cactus or if no
    attempt within max_retries certifies.
    """
    chk = is_christmas_cactus(g)
    if not chk:
        raise ValueError(f"not a Christmas cactus: {chk.reason}")
    seeds = [root]
    for cand in (_graph_center(g), max(range(g.vertex_count), key=lambda v: len(g.adjacency()[v]))):
        if cand not in seeds:
            seeds.append(cand)
    trees = {r: block_cut_decompose(g, r) for r in seeds}
    lam, alpha, rho = p.wedge_shrink, p.arc_flatness, p.radial_step
    ea = np.array([e[0] for e in g.edges], dtype=int)
    eb = np.array([e[1] for e in g.edges], dtype=int)
    plan = (
        ("repair", REPAIR_ITERS),
        ("polish", 150), ("lp", 40),
        ("polish", 150), ("lp", 40),
        ("sway", 80),
        ("polish", 150), ("lp", 40),
    )
    last = "no attempt ran"
    for attempt in range(p.max_retries + 1):
        t = trees[seeds[attempt % len(seeds)]]
        # the arc seed certifies open structures immediately; cluster seeds
        # handle graphs whose cycles carry dead-end subtrees, where the arc
        # basin tops out exactly at zero margin; the wedge seed stays as a
        # structurally different last resort
        if attempt == 0:
            place = _place_ring
        elif attempt < p.max_retries - 1:
            place = _place_cone
        else:
            place = _place
        pts = place(g, t, lam, alpha, rho)
        P0 = np.asarray(pts, dtype=float)
        floor = SHRINK_FLOOR * np.sqrt(((P0[ea] - P0[eb]) ** 2).sum(-1))
        for stage in range(len(plan) + 1):
            try:
                emb = Embedding(_rebase(pts, root))
                cert = verify_greedy(g, emb)
            except ValueError as exc:  # degenerate layout, e.g. coincident points
                last = str(exc)
                break
            if cert:
                return EmbedResult(emb, attempt, cert)
            last = (
                f"margin {cert.min_relative_margin:.3e} at pair {cert.worst_pair}"
            )
            if stage == len(plan):
                break
            kind, budget = plan[stage]
            if kind == "repair":
                pts = _repair(g, pts, budget, floor)
            elif kind == "polish":
                pts = _polish(g, pts, budget, floor)
            elif kind == "lp":
                pts = _lpstep(g, pts, budget, floor)
            else:
                pts = _sway(g, t, pts, budget, floor)
        # the decay floor keeps very late seeds from shrinking deep branches
        # below double precision
        if lam > 0.01:
            lam *= p.decay
            alpha *= p.decay
            rho *= p.decay
    raise RuntimeError(
        f"certification failed after {p.max_retries} retries (last: {last})"
    )
