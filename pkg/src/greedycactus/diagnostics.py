"""Geometric diagnostics behind the exponential aspect-ratio bound.

In any certified drawing of the glued family some copy is forced to be
"narrow": all of its designated chain vectors point within 12 degrees of one
another.  Along a narrow copy the spine edge lengths then at least halve at
every step, which is what drives the ratio past 2^k.  These helpers measure
both phenomena (they monitor, never judge) and pin down the trigonometric
constants the halving argument rests on.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

from .families import FK, CopyMap, FamilyInstance
from .verify import Embedding

NARROW_ANGLE_DEG = 12.0


def _vec(e: Embedding, a: int, b: int) -> tuple[float, float]:
    ax, ay = e.point(a)
    bx, by = e.point(b)
    return (bx - ax, by - ay)


def _angle_between_deg(u: tuple[float, float], v: tuple[float, float]) -> float:
    cross = u[0] * v[1] - u[1] * v[0]
    dot = u[0] * v[0] + u[1] * v[1]
    return math.degrees(math.atan2(abs(cross), dot))


def designated_vectors(cm: CopyMap, e: Embedding) -> list[tuple[float, float]]:
    """The 3k+1 chain vectors of one copy: spine hops, apex hops, leaf hops."""
    k = cm.k
    vecs = [_vec(e, cm.u(i), cm.u(i + 1)) for i in range(k + 1)]
    vecs += [_vec(e, cm.u(i), cm.v(i + 1)) for i in range(k)]
    vecs += [_vec(e, cm.v(i), cm.w(i + 1)) for i in range(1, k + 1)]
    for w in vecs:
        if w == (0.0, 0.0):
            raise ValueError("coincident points give a zero-length vector")
    return vecs


def max_pairwise_angle_deg(vectors: list[tuple[float, float]]) -> float:
    best = 0.0
    for i in range(len(vectors)):
        for j in range(i + 1, len(vectors)):
            a = _angle_between_deg(vectors[i], vectors[j])
            if a > best:
                best = a
    return best


class HalvingRow(NamedTuple):
    """One spine step: index i, ratio r_i, and the two intermediate quotients."""

    i: int
    r: float
    bc_by: float
    ab_bc: float


@dataclass(frozen=True)
class DiagnosticsReport:
    """Narrow-copy verdicts plus per-copy angle and halving measurements."""

    narrow_copies: tuple[int, ...]
    max_angles_deg: tuple[float, ...]
    halving: tuple[tuple[HalvingRow, ...], ...] = ()


def narrow_copies(f: FamilyInstance, e: Embedding) -> DiagnosticsReport:
    """Find copies whose designated vectors pairwise stay under 12 degrees."""
    if f.kind != FK:
        raise ValueError(f"narrow-copy search expects the glued family, got kind {f.kind!r}")
    angles = tuple(
        max_pairwise_angle_deg(designated_vectors(cm, e)) for cm in f.copies
    )
    narrow = tuple(j for j, a in enumerate(angles) if a < NARROW_ANGLE_DEG)
    return DiagnosticsReport(narrow, angles)


def halving_check(f: FamilyInstance, copy: int, e: Embedding) -> list[HalvingRow]:
    """Spine length ratios r_i = |u_{i+1}u_{i+2}| / |u_i u_{i+1}| for one copy.

    With a = u_{i+2}, b = u_{i+1}, c = v_{i+1}, y = u_i, each row also carries
    |bc|/|by| and |ab|/|bc|; in a narrow certified copy these stay below 0.36
    and 1.28, forcing r_i = |ab|/|by| below 1/2.
    """
    cm = f.copies[copy]
    rows = []
    for i in range(cm.k):
        a = e.point(cm.u(i + 2))
        b = e.point(cm.u(i + 1))
        c = e.point(cm.v(i + 1))
        y = e.point(cm.u(i))
        ab = math.dist(a, b)
        by = math.dist(b, y)
        bc = math.dist(b, c)
        if min(ab, by, bc) == 0.0:
            raise ValueError("coincident points give a zero-length vector")
        rows.append(HalvingRow(i, ab / by, bc / by, ab / bc))
    return rows


def diagnose(f: FamilyInstance, e: Embedding) -> DiagnosticsReport:
    """Full report: narrow copies plus halving rows for every copy."""
    base = narrow_copies(f, e)
    halv = tuple(tuple(halving_check(f, j, e)) for j in range(len(f.copies)))
    return DiagnosticsReport(base.narrow_copies, base.max_angles_deg, halv)


@dataclass(frozen=True)
class AngleDiagnostics:
    greedy_both_ways: bool
    angle_at_b: float


def angle_diagnostics(a: tuple[float, float], b: tuple[float, float], d: tuple[float, float]) -> AngleDiagnostics:
    """Check whether the 2-hop path a-b-d descends in both directions.

    greedy_both_ways iff |bd| < |ad| and |ba| < |da|, i.e. the endpoints'
    separation strictly dominates both hops from b.  When it holds, the angle
    at b must exceed 60 degrees (the longest side faces the largest angle).
    """
    if a == b or b == d or a == d:
        raise ValueError("points must be pairwise distinct")
    ad = math.dist(a, d)
    greedy = math.dist(b, d) < ad and math.dist(b, a) < ad
    ba = (a[0] - b[0], a[1] - b[1])
    bd = (d[0] - b[0], d[1] - b[1])
    return AngleDiagnostics(greedy, _angle_between_deg(ba, bd))


class ConstantRow(NamedTuple):
    expression: str
    value: float
    bound: float


def lemma_constants_check() -> list[ConstantRow]:
    """Evaluate the halving argument's trigonometric constants against their bounds.

    With the narrowness angle at 12 degrees the two quotient bounds are
    sin(12)/sin(36) and sin(72)/sin(48); their product, and the coarser
    0.36 * 1.28, both stay under 0.461 < 1/2.
    """
    q1 = math.sin(math.radians(12)) / math.sin(math.radians(36))
    q2 = math.sin(math.radians(72)) / math.sin(math.radians(48))
    rows = [
        ConstantRow("sin(12°)/sin(36°)", q1, 0.36),
        ConstantRow("sin(72°)/sin(48°)", q2, 1.28),
        ConstantRow("sin(12°)/sin(36°) · sin(72°)/sin(48°)", q1 * q2, 0.461),
        ConstantRow("0.36 · 1.28", 0.36 * 1.28, 0.461),
    ]
    for row in rows:
        if not row.value < row.bound:
            raise AssertionError(f"{row.expression} = {row.value} is not below {row.bound}")
    return rows
