"""Narrow copies, the halving ratios, angle checks, and frozen constants."""
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greedycactus import gen_fk, gen_gk
from greedycactus.diagnostics import (
    AngleDiagnostics,
    angle_diagnostics,
    designated_vectors,
    diagnose,
    halving_check,
    lemma_constants_check,
    max_pairwise_angle_deg,
    narrow_copies,
)
from greedycactus.verify import Embedding

# independently recomputed at 30 digits, then rounded to double
SIN12_OVER_SIN36 = 0.35372049571993275
SIN72_OVER_SIN48 = 1.2797727760321784
PRODUCT = 0.45268186074697664


def parallel_fk_embedding(k: int = 1) -> tuple:
    """Every copy drawn on its own horizontal line: all chain vectors parallel."""
    inst = gen_fk(k)
    n = inst.graph.vertex_count
    pts = [None] * n
    for j, cv in enumerate(inst.cycle_vertices):
        pts[cv] = (0.0, 3.0 * j)
    for j, cm in enumerate(inst.copies):
        y = 3.0 * j
        for i in range(k + 2):
            pts[cm.u(i)] = (float(i), y)
        for i in range(1, k + 1):
            pts[cm.v(i)] = (i - 0.4, y)
        for i in range(2, k + 2):
            pts[cm.w(i)] = (i - 0.2, y)
    return inst, Embedding(pts)


class TestLemmaConstants:
    def test_frozen_values(self):
        rows = lemma_constants_check()
        by_expr = {r.expression: r for r in rows}
        assert by_expr["sin(12°)/sin(36°)"].value == pytest.approx(SIN12_OVER_SIN36, rel=1e-14)
        assert by_expr["sin(72°)/sin(48°)"].value == pytest.approx(SIN72_OVER_SIN48, rel=1e-14)
        assert by_expr["sin(12°)/sin(36°) · sin(72°)/sin(48°)"].value == pytest.approx(
            PRODUCT, rel=1e-14
        )

    def test_all_below_bounds(self):
        for row in lemma_constants_check():
            assert row.value < row.bound

    def test_stated_bounds(self):
        rows = lemma_constants_check()
        assert [r.bound for r in rows[:3]] == [0.36, 1.28, 0.461]
        assert rows[3].value == pytest.approx(0.4608)
        assert rows[3].bound == 0.461


class TestDesignatedVectors:
    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_count(self, k):
        inst, e = parallel_fk_embedding(k)
        assert len(designated_vectors(inst.copies[0], e)) == 3 * k + 1

    def test_zero_vector_rejected(self):
        inst, e = parallel_fk_embedding(1)
        pts = e.points.copy()
        cm = inst.copies[0]
        pts[cm.u(1)] = pts[cm.u(0)]  # collapse one spine edge
        with pytest.raises(ValueError, match="zero-length"):
            designated_vectors(cm, Embedding(pts))


class TestNarrowCopies:
    def test_all_parallel_all_narrow(self):
        inst, e = parallel_fk_embedding(1)
        rep = narrow_copies(inst, e)
        assert rep.narrow_copies == tuple(range(30))
        assert all(a == pytest.approx(0.0, abs=1e-12) for a in rep.max_angles_deg)

    def test_right_angle_copy_not_narrow(self):
        inst, e = parallel_fk_embedding(1)
        pts = e.points.copy()
        cm = inst.copies[0]
        # turn the leaf hop vertical: exactly 90 degrees against the spine
        vx, vy = e.point(cm.v(1))
        pts[cm.w(2)] = (vx, vy + 0.5)
        rep = narrow_copies(inst, Embedding(pts))
        assert 0 not in rep.narrow_copies
        assert set(rep.narrow_copies) == set(range(1, 30))
        assert rep.max_angles_deg[0] == pytest.approx(90.0)

    def test_rejects_gk_instance(self):
        inst = gen_gk(1)
        with pytest.raises(ValueError, match="kind"):
            narrow_copies(inst, Embedding([(float(i), 0.0) for i in range(5)]))

    def test_angles_within_range(self):
        inst, e = parallel_fk_embedding(2)
        rep = narrow_copies(inst, e)
        assert all(0.0 <= a <= 180.0 for a in rep.max_angles_deg)


class TestHalvingCheck:
    def test_direct_quotient(self):
        # |u0u1| = 1 and |u1u2| = 0.4 gives r_0 = 0.4
        inst = gen_gk(1)
        e = Embedding([(0.0, 0.0), (1.0, 0.0), (1.4, 0.0), (0.5, 0.3), (0.6, 0.9)])
        rows = halving_check(inst, 0, e)
        assert len(rows) == 1
        assert rows[0].i == 0
        assert rows[0].r == pytest.approx(0.4)

    def test_intermediate_quotients(self):
        inst = gen_gk(1)
        u0, u1, u2, v1 = (0.0, 0.0), (1.0, 0.0), (1.4, 0.0), (0.5, 0.3)
        e = Embedding([u0, u1, u2, v1, (0.6, 0.9)])
        (row,) = halving_check(inst, 0, e)
        assert row.bc_by == pytest.approx(math.dist(u1, v1) / math.dist(u1, u0))
        assert row.ab_bc == pytest.approx(math.dist(u2, u1) / math.dist(u1, v1))
        assert row.r == pytest.approx(row.bc_by * row.ab_bc)

    def test_row_count_matches_k(self):
        inst, e = parallel_fk_embedding(3)
        assert len(halving_check(inst, 7, e)) == 3

    def test_coincident_rejected(self):
        inst = gen_gk(1)
        e = Embedding([(0.0, 0.0), (1.0, 0.0), (1.0, 0.0), (0.5, 0.3), (0.6, 0.9)])
        with pytest.raises(ValueError):
            halving_check(inst, 0, e)


class TestDiagnose:
    def test_fills_both_parts(self):
        inst, e = parallel_fk_embedding(2)
        rep = diagnose(inst, e)
        assert len(rep.max_angles_deg) == 30
        assert len(rep.halving) == 30
        assert all(len(rows) == 2 for rows in rep.halving)


class TestAngleDiagnostics:
    def test_collinear(self):
        d = angle_diagnostics((0.0, 0.0), (1.0, 0.0), (2.0, 0.0))
        assert d == AngleDiagnostics(True, pytest.approx(180.0))

    def test_bent_but_greedy(self):
        d = angle_diagnostics((0.0, 0.0), (1.0, 0.0), (1.2, 1.2))
        assert d.greedy_both_ways
        assert d.angle_at_b == pytest.approx(99.46232220802561, abs=1e-9)

    def test_short_far_side_not_greedy(self):
        d = angle_diagnostics((0.0, 0.0), (1.0, 0.0), (0.4, 0.9))
        assert not d.greedy_both_ways

    def test_coincident_rejected(self):
        with pytest.raises(ValueError):
            angle_diagnostics((0.0, 0.0), (0.0, 0.0), (1.0, 1.0))

    @settings(max_examples=200, deadline=None)
    @given(
        coords=st.lists(st.floats(-10, 10, allow_nan=False, width=32), min_size=6, max_size=6)
    )
    def test_greedy_both_ways_forces_wide_angle(self, coords):
        a, b, d = (coords[0], coords[1]), (coords[2], coords[3]), (coords[4], coords[5])
        if a == b or b == d or a == d:
            return
        res = angle_diagnostics(a, b, d)
        assert 0.0 <= res.angle_at_b <= 180.0
        far, h1, h2 = math.dist(a, d), math.dist(a, b), math.dist(b, d)
        if far - max(h1, h2) < 1e-9 * far:
            return  # longest side wins by a rounding margin only
        if res.greedy_both_ways:
            # the a-d side is the strict longest, so the angle at b dominates
            assert res.angle_at_b > 60.0


class TestMaxPairwiseAngle:
    def test_opposite_vectors(self):
        assert max_pairwise_angle_deg([(1.0, 0.0), (-1.0, 0.0)]) == pytest.approx(180.0)

    def test_single_vector(self):
        assert max_pairwise_angle_deg([(1.0, 0.0)]) == 0.0
