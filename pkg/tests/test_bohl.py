import math

import numpy as np
import pytest
from conftest import random_trinomial

from harmtri.bohl import (
    Regime,
    bohl_analysis,
    count_roots_below,
    nearest_admissible,
    pivot,
    regime,
    regime_count,
    w_star,
    w_star_range,
)
from harmtri.core import HarmonicTrinomial, triangle_profile
from harmtri.errors import DegenerateCoefficient, OnBoundary
from harmtri.roots import find_all_roots


class TestPivot:
    def test_real_coefficients(self, h_bdominant):
        # alpha = 0, beta = pi, gamma = 0
        assert pivot(h_bdominant) == pytest.approx(-1.5, abs=1e-15)

    def test_triangle_example(self, h_triangle):
        assert pivot(h_triangle) == -2.0

    def test_needs_all_coefficients(self):
        with pytest.raises(DegenerateCoefficient):
            pivot(HarmonicTrinomial(1, 0, 1, 1, 1))


class TestWStar:
    def test_plateaus(self, h_bdominant):
        n, m = h_bdominant.n, h_bdominant.m
        assert w_star(h_bdominant, 0.5) == 0.0
        assert w_star(h_bdominant, 2.0) == -m / 2
        assert w_star(h_bdominant, 6.0) == (n + m) / 2

    def test_right_triangle(self, h_triangle):
        assert w_star(h_triangle, 1.0) == pytest.approx(0.25, abs=1e-15)

    def test_continuity_at_profile_radii(self, h_eleven):
        prof = triangle_profile(h_eleven)
        for r, value in [(prof.c_radius, 0.0), (prof.b_radii[0], -1.5), (prof.b_radii[1], -1.5),
                         (prof.a_radius, 2.5)]:
            for u in (r * (1 - 1e-9), r * (1 + 1e-9)):
                assert w_star(h_eleven, u) == pytest.approx(value, abs=1e-3)

    def test_range_contains_value(self, h_eleven):
        lo, hi = w_star_range(h_eleven, 1.0)
        assert lo <= w_star(h_eleven, 1.0) <= hi
        assert lo == pytest.approx(-1.5)


class TestRegime:
    @pytest.mark.parametrize("v,expected", [(0.5, Regime.CDominant), (2.0, Regime.BDominant),
                                            (6.0, Regime.ADominant)])
    def test_regimes(self, h_bdominant, v, expected):
        assert regime(h_bdominant, v) is expected

    def test_triangle(self, h_triangle):
        assert regime(h_triangle, 1.0) is Regime.Triangle

    def test_degenerate_boundary(self, h_triangle):
        assert regime(h_triangle, triangle_profile(h_triangle).c_radius) is Regime.DegenerateBoundary

    def test_regime_count(self, h_bdominant):
        assert regime_count(h_bdominant, 0.5) == 0
        assert regime_count(h_bdominant, 2.0) == 3
        assert regime_count(h_bdominant, 6.0) is None


class TestCount:
    @pytest.mark.parametrize("v,count", [(0.5, 0), (2.0, 3), (6.0, 10)])
    def test_dominant_regimes(self, h_bdominant, v, count):
        assert count_roots_below(h_bdominant, v) == count

    def test_triangle_worked_example(self, h_triangle):
        res = bohl_analysis(h_triangle, 1.0)
        assert res.count == 1
        assert res.p_star == -2.0
        assert res.w_star_at_v == pytest.approx(0.25, abs=1e-12)
        assert res.method == "crossing"
        assert res.boundary_roots == 1  # the real root at the C-radius, since P* is an integer

    def test_all_roots_below_large_radius(self, h_eleven, h_triangle):
        assert count_roots_below(h_eleven, 10.0) == 11
        assert count_roots_below(h_triangle, 2.0) == 3

    def test_monotone_in_v(self, h_eleven):
        counts = [count_roots_below(h_eleven, v) for v in (0.3, 0.545, 0.6, 2.44, 2.45, 2.458, 3.0)]
        assert counts == sorted(counts)
        assert counts == [0, 1, 3, 5, 7, 9, 11]

    def test_against_oracle(self):
        rng = np.random.default_rng(7)
        for _ in range(12):
            h = random_trinomial(rng)
            roots = find_all_roots(h)
            for v in np.sort(rng.uniform(0.2, 3.0, 3)):
                try:
                    res = bohl_analysis(h, v)
                except OnBoundary:
                    continue
                assert res.count == roots.count_below(v), (h, v)

    def test_image_formula_agrees_when_w_monotone(self, h_triangle):
        res = bohl_analysis(h_triangle, 1.0)
        assert res.image_formula_count == res.count

    def test_to_dict(self, h_triangle):
        d = bohl_analysis(h_triangle, 1.0).to_dict()
        assert d["regime"] == "Triangle"
        assert d["count"] == 1


class TestBoundary:
    def test_b_radius_rejected(self):
        h = HarmonicTrinomial(1, -1.5, 0.5, 2, 1)  # B vanishes at v = 1
        with pytest.raises(OnBoundary) as info:
            bohl_analysis(h, 1.0)
        assert info.value.reason == "b_radius"

    def test_root_modulus_rejected(self, h_triangle):
        # P* is an integer, so the C-radius carries a root
        v = triangle_profile(h_triangle).c_radius
        with pytest.raises(OnBoundary) as info:
            bohl_analysis(h_triangle, v)
        assert info.value.reason == "root_modulus"

    def test_nearest_admissible(self):
        h = HarmonicTrinomial(1, -1.5, 0.5, 2, 1)
        lo, hi = nearest_admissible(h, 1.0)
        assert lo < 1.0 < hi
        assert hi - lo < 1e-6
        assert count_roots_below(h, lo) + 0 <= count_roots_below(h, hi)

    def test_degenerate_coefficient(self):
        with pytest.raises(DegenerateCoefficient):
            bohl_analysis(HarmonicTrinomial(1, 1, 0, 1, 1), 1.0)

    def test_bad_radius(self, h_triangle):
        with pytest.raises(ValueError):
            bohl_analysis(h_triangle, -1.0)
        with pytest.raises(ValueError):
            bohl_analysis(h_triangle, math.nan)
