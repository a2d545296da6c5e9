"""Greedy certification, the reachability oracle, paths, and aspect ratio."""
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from greedycactus import build_graph, random_christmas_cactus
from greedycactus.verify import (
    GREEDY,
    VIOLATED,
    Embedding,
    NoDescent,
    aspect_ratio,
    greedy_path,
    verify_greedy,
    verify_greedy_oracle,
)
from support import complete_graph, cycle_graph, path_graph, star_graph


def equilateral():
    g = complete_graph(3)
    e = Embedding([(0.0, 0.0), (1.0, 0.0), (0.5, math.sqrt(3) / 2)])
    return g, e


def bent_p3():
    # a--b--c on a line with b overshooting: a at 0, b at 3, c at 1
    g = path_graph(3)
    e = Embedding([(0.0, 0.0), (3.0, 0.0), (1.0, 0.0)])
    return g, e


def regular_polygon(n: int) -> Embedding:
    pts = [(math.cos(2 * math.pi * i / n), math.sin(2 * math.pi * i / n)) for i in range(n)]
    return Embedding(pts)


def random_points(n: int, seed: int) -> Embedding:
    rng = np.random.default_rng(seed)
    return Embedding(rng.uniform(-1, 1, size=(n, 2)))


class TestEmbedding:
    def test_shape_checked(self):
        with pytest.raises(ValueError, match="shape"):
            Embedding([1.0, 2.0, 3.0])

    def test_nonfinite_rejected(self):
        with pytest.raises(ValueError, match="nonfinite"):
            Embedding([(0.0, 0.0), (math.nan, 1.0)])
        with pytest.raises(ValueError, match="nonfinite"):
            Embedding([(0.0, math.inf)])

    def test_points_read_only(self):
        e = Embedding([(0.0, 0.0), (1.0, 0.0)])
        with pytest.raises(ValueError):
            e.points[0, 0] = 5.0

    def test_transformed_preserves_shape(self):
        e = Embedding([(0.0, 0.0), (1.0, 0.0)])
        f = e.transformed(scale=2.0, angle=math.pi / 2, shift=(1.0, 1.0))
        assert f.point(0) == pytest.approx((1.0, 1.0))
        assert f.point(1) == pytest.approx((1.0, 3.0))


class TestVerifyGreedy:
    def test_equilateral_triangle(self):
        g, e = equilateral()
        cert = verify_greedy(g, e)
        assert cert.verdict == GREEDY
        assert bool(cert)
        # t is s's own neighbor at distance 0, so every relative margin is 1
        off = ~np.eye(3, dtype=bool)
        assert np.allclose(cert.margins[off], 1.0)
        assert cert.min_relative_margin == pytest.approx(1.0)
        assert cert.aspect_ratio == pytest.approx(1.0)

    def test_bent_path_violated(self):
        g, e = bent_p3()
        cert = verify_greedy(g, e)
        assert cert.verdict == VIOLATED
        assert not bool(cert)
        # a's only neighbor sits at distance 2 from c while |ac| = 1
        assert cert.margins[0, 2] == pytest.approx(-1.0)
        # the reverse direction is even worse: hop of 3 against |ca| = 1
        assert cert.worst_pair == (2, 0)
        assert cert.min_relative_margin == pytest.approx(-2.0)

    def test_exact_tie_is_violation(self):
        # the middle vertex is exactly equidistant from the two ends, so the
        # pair (0, 2) has margin exactly 0: not strictly closer, hence VIOLATED
        g = path_graph(3)
        e = Embedding([(0.0, 0.0), (0.0, 1.0), (2.0, 0.5)])
        cert = verify_greedy(g, e, tolerance=0.0)
        assert cert.verdict == VIOLATED
        assert cert.worst_pair == (0, 2)
        assert cert.min_relative_margin == 0.0

    def test_margins_shape_and_diagonal(self):
        g, e = equilateral()
        cert = verify_greedy(g, e)
        assert cert.margins.shape == (3, 3)
        assert np.all(np.isnan(np.diag(cert.margins)))
        assert cert.tolerance == 1e-9

    def test_size_mismatch(self):
        g = path_graph(3)
        with pytest.raises(ValueError, match="3 vertices"):
            verify_greedy(g, Embedding([(0.0, 0.0), (1.0, 0.0)]))

    def test_coincident_points(self):
        g = path_graph(3)
        e = Embedding([(0.0, 0.0), (1.0, 0.0), (0.0, 0.0)])
        with pytest.raises(ValueError, match="coincident"):
            verify_greedy(g, e)

    @settings(max_examples=40, deadline=None)
    @given(seed=st.integers(0, 10**6))
    def test_star_always_violated(self, seed):
        # six leaf pairs would each need >60 degrees at the hub: impossible
        g = star_graph(6)
        cert = verify_greedy(g, random_points(7, seed))
        assert cert.verdict == VIOLATED

    @settings(max_examples=40, deadline=None)
    @given(n=st.integers(3, 6), seed=st.integers(0, 10**6))
    def test_complete_graphs_always_greedy(self, n, seed):
        cert = verify_greedy(complete_graph(n), random_points(n, seed))
        assert cert.verdict == GREEDY

    @pytest.mark.parametrize("n", range(3, 13))
    def test_regular_cycles_greedy(self, n):
        cert = verify_greedy(cycle_graph(n), regular_polygon(n))
        assert cert.verdict == GREEDY


class TestOracle:
    def test_equilateral_agrees(self):
        g, e = equilateral()
        assert verify_greedy_oracle(g, e) == GREEDY
        assert verify_greedy(g, e, tolerance=0.0).verdict == GREEDY

    def test_regular_pentagon(self):
        assert verify_greedy_oracle(cycle_graph(5), regular_polygon(5)) == GREEDY

    def test_bent_path_agrees(self):
        g, e = bent_p3()
        assert verify_greedy_oracle(g, e) == VIOLATED

    @settings(max_examples=80, deadline=None)
    @given(n=st.integers(2, 12), seed=st.integers(0, 10**6))
    def test_agreement_on_random_cactuses(self, n, seed):
        g = random_christmas_cactus(n, seed)
        e = random_points(n, seed + 1)
        cert = verify_greedy(g, e, tolerance=0.0)
        if abs(cert.min_relative_margin) < 1e-12:
            return  # floating-point tie, either verdict is defensible
        assert verify_greedy_oracle(g, e) == cert.verdict

    def test_coincident_points(self):
        g = path_graph(2)
        with pytest.raises(ValueError, match="coincident"):
            verify_greedy_oracle(g, Embedding([(1.0, 2.0), (1.0, 2.0)]))


class TestGreedyPath:
    def test_triangle_direct(self):
        g, e = equilateral()
        assert greedy_path(g, e, 0, 2) == [0, 2]

    def test_collinear_path(self):
        g = path_graph(3)
        e = Embedding([(0.0, 0.0), (1.0, 0.0), (2.0, 0.0)])
        assert greedy_path(g, e, 0, 2) == [0, 1, 2]

    def test_stuck_returns_no_descent(self):
        g, e = bent_p3()
        res = greedy_path(g, e, 0, 2)
        assert res == NoDescent(0)
        assert not res

    def test_same_vertex_rejected(self):
        g, e = equilateral()
        with pytest.raises(ValueError):
            greedy_path(g, e, 1, 1)

    def test_tie_breaks_to_smallest_index(self):
        # both outer vertices of this star-of-3 are equidistant from t; path picks index order
        g = build_graph(4, [(3, 0), (3, 1), (0, 2), (1, 2)])
        e = Embedding([(0.0, 1.0), (0.0, -1.0), (1.0, 0.0), (-1.0, 0.0)])
        assert greedy_path(g, e, 3, 2) == [3, 0, 2]

    @settings(max_examples=30, deadline=None)
    @given(n=st.integers(3, 8), seed=st.integers(0, 10**5))
    def test_soundness_on_greedy_instances(self, n, seed):
        g = complete_graph(n)
        e = random_points(n, seed)
        assert verify_greedy(g, e).verdict == GREEDY
        for s in range(n):
            for t in range(n):
                if s == t:
                    continue
                path = greedy_path(g, e, s, t)
                assert isinstance(path, list) and path[0] == s and path[-1] == t
                dists = [math.dist(e.point(v), e.point(t)) for v in path]
                assert all(x > y for x, y in zip(dists, dists[1:]))


class TestAspectRatio:
    def test_unit_square(self):
        g = cycle_graph(4)
        e = Embedding([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
        assert aspect_ratio(g, e) == pytest.approx(1.0)

    def test_uneven_path(self):
        g = path_graph(3)
        e = Embedding([(0.0, 0.0), (1.0, 0.0), (3.0, 0.0)])
        assert aspect_ratio(g, e) == pytest.approx(2.0)

    def test_scale_invariant(self):
        g = path_graph(3)
        e = Embedding([(0.0, 0.0), (1.0, 0.0), (3.0, 0.0)])
        assert aspect_ratio(g, e.transformed(scale=7.0)) == pytest.approx(2.0)

    def test_edgeless_rejected(self):
        with pytest.raises(ValueError, match="edgeless"):
            aspect_ratio(build_graph(1, []), Embedding([(0.0, 0.0)]))

    def test_at_least_one(self):
        g = path_graph(4)
        e = random_points(4, 3)
        assert aspect_ratio(g, e) >= 1.0


class TestSimilarityInvariance:
    @settings(max_examples=60, deadline=None)
    @given(
        seed=st.integers(0, 10**5),
        angle=st.floats(0, 2 * math.pi),
        log_scale=st.floats(-3, 3),
        dx=st.floats(-50, 50),
        dy=st.floats(-50, 50),
    )
    def test_certificate_unchanged(self, seed, angle, log_scale, dx, dy):
        g = random_christmas_cactus(8, seed)
        e = random_points(8, seed)
        f = e.transformed(scale=10.0**log_scale, angle=angle, shift=(dx, dy))
        a = verify_greedy(g, e)
        b = verify_greedy(g, f)
        assert a.verdict == b.verdict
        assert b.min_relative_margin == pytest.approx(a.min_relative_margin, rel=1e-9, abs=1e-9)
        assert aspect_ratio(g, f) == pytest.approx(aspect_ratio(g, e), rel=1e-9)
        off = ~np.eye(8, dtype=bool)
        assert np.allclose(a.margins[off], b.margins[off], rtol=1e-9, atol=1e-9)
