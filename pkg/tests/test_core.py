import math

import numpy as np
import pytest

from harmtri.core import (
    DEFAULT_TOL,
    HarmonicTrinomial,
    Tolerances,
    arg,
    b_peak_radius,
    circular_distance,
    integer_distance,
    radial_polynomials,
    side_lengths,
    triangle_angles,
    triangle_profile,
)
from harmtri.errors import DegenerateCoefficient, DegenerateTriangle, InvalidTrinomial, NotATriangle


def _positive_real_root(coeffs):
    r = np.roots(coeffs)
    return float(min(x.real for x in r if abs(x.imag) < 1e-12 and x.real > 0))


class TestHelpers:
    def test_arg_range(self):
        assert arg(1) == 0.0
        assert arg(-1) == pytest.approx(math.pi)
        assert arg(-1j) == pytest.approx(1.5 * math.pi)
        assert 0.0 <= arg(complex(1, -1e-300)) < 2 * math.pi

    def test_circular_distance(self):
        assert circular_distance(2 * math.pi + 0.1) == pytest.approx(0.1)
        assert circular_distance(-0.1) == pytest.approx(0.1)
        assert circular_distance(math.pi) == pytest.approx(math.pi)

    def test_integer_distance(self):
        assert integer_distance(2.25) == pytest.approx(0.25)
        assert integer_distance(-1.9) == pytest.approx(0.1)


class TestTolerances:
    def test_round_trip(self):
        tol = Tolerances(residual=1e-9)
        assert Tolerances.from_dict(tol.to_dict()) == tol

    def test_unknown_key(self):
        with pytest.raises(ValueError, match="unknown"):
            Tolerances.from_dict({"residul": 1e-9})


class TestTrinomial:
    def test_coprime_rule(self):
        with pytest.raises(InvalidTrinomial, match="coprime"):
            HarmonicTrinomial(1, 1, 1, 2, 4)

    @pytest.mark.parametrize("n,m", [(0, 1), (1, 0), (-1, 2)])
    def test_positive_exponents(self, n, m):
        with pytest.raises(InvalidTrinomial):
            HarmonicTrinomial(1, 1, 1, n, m)

    def test_non_integer_exponent(self):
        with pytest.raises(InvalidTrinomial, match="integer"):
            HarmonicTrinomial(1, 1, 1, 1.5, 1)

    def test_zero_leading(self):
        with pytest.raises(InvalidTrinomial, match="nonzero"):
            HarmonicTrinomial(0, 1, 1, 1, 1)

    def test_non_finite(self):
        with pytest.raises(InvalidTrinomial, match="finite"):
            HarmonicTrinomial(1, float("nan"), 1, 1, 1)

    def test_evaluate(self, h_eleven):
        z = 0.3 + 0.7j
        expected = z ** 5 + 6 * np.conj(z) ** 3 + 1
        assert h_eleven(z) == pytest.approx(expected)
        vec = h_eleven(np.array([z, 2 * z]))
        assert vec.shape == (2,)
        assert vec[0] == pytest.approx(expected)

    def test_properties(self, h_eleven):
        assert h_eleven.degree == 5
        assert h_eleven.max_roots == 11
        assert (h_eleven.alpha, h_eleven.beta, h_eleven.gamma) == (0.0, 0.0, 0.0)

    def test_dict_round_trip(self):
        h = HarmonicTrinomial(1 - 2j, 3j, -0.5, 3, 2)
        assert HarmonicTrinomial.from_dict(h.to_dict()) == h

    def test_from_dict_defaults(self):
        h = HarmonicTrinomial.from_dict({"n": 2, "m": 1, "c": 4})
        assert (h.a, h.b, h.c) == (1, 0, 4)

    def test_from_dict_missing(self):
        with pytest.raises(InvalidTrinomial, match="'m'"):
            HarmonicTrinomial.from_dict({"n": 2})

    def test_normalized(self):
        h = HarmonicTrinomial(2j, 4, 6, 1, 2).normalized()
        assert h.a == 1
        assert h.b == pytest.approx(-2j)
        assert h.c == pytest.approx(-3j)


class TestRadial:
    def test_side_lengths(self, h_eleven):
        assert side_lengths(h_eleven, 2.0) == (32.0, 48.0, 1.0)

    def test_radial_signs(self, h_eleven):
        A, B, C = radial_polynomials(h_eleven, 2.0)
        assert (A, B, C) == (32 - 49, -33 + 48, -80 + 1)

    def test_profile_radii_against_polynomial_roots(self, h_triangle):
        s2 = math.sqrt(2)
        prof = triangle_profile(h_triangle)
        # C = 0:  v^3 + v - sqrt2;  A = 0:  v^3 - v - sqrt2
        assert prof.c_radius == pytest.approx(_positive_real_root([1, 0, 1, -s2]), rel=1e-13)
        assert prof.a_radius == pytest.approx(_positive_real_root([1, 0, -1, -s2]), rel=1e-13)
        assert prof.b_kind == "none"

    def test_profile_pair(self):
        h = HarmonicTrinomial(1, -6, 1, 3, 2)
        prof = triangle_profile(h)
        assert prof.b_kind == "pair"
        # real roots of z^5 - 6 conj(z)^2 + 1 at the b-radii
        assert prof.b_radii[0] == pytest.approx(0.410624, abs=1e-6)
        assert prof.b_radii[1] == pytest.approx(1.784863, abs=1e-6)
        assert prof.c_radius < prof.b_radii[0] < prof.b_peak < prof.b_radii[1] < prof.a_radius

    def test_profile_double(self):
        prof = triangle_profile(HarmonicTrinomial(1, -1.5, 0.5, 1, 2))
        assert prof.b_kind == "double"
        assert prof.b_radii[0] == pytest.approx(1.0, abs=1e-9)

    def test_peak_maximises_b(self, h_eleven):
        v = b_peak_radius(h_eleven)
        assert v == pytest.approx((3 * 6 / 5) ** 0.5)
        B = lambda u: radial_polynomials(h_eleven, u)[1]  # noqa: E731
        assert B(v) >= max(B(v * 0.999), B(v * 1.001))

    def test_profile_needs_coefficients(self):
        with pytest.raises(DegenerateCoefficient):
            triangle_profile(HarmonicTrinomial(1, 0, 1, 1, 1))


class TestAngles:
    def test_angles_sum(self, h_triangle):
        w1, w2 = triangle_angles(h_triangle, 1.0)
        sA, sB, sC = side_lengths(h_triangle, 1.0)
        # third angle from the law of cosines closes the triangle
        w3 = math.acos((sA ** 2 + sB ** 2 - sC ** 2) / (2 * sA * sB))
        assert w1 + w2 + w3 == pytest.approx(math.pi, abs=1e-14)
        # sides (1, 1, sqrt2): right isosceles triangle
        assert w1 == pytest.approx(math.pi / 4, abs=1e-15)
        assert w2 == pytest.approx(math.pi / 4, abs=1e-15)
        assert w3 == pytest.approx(math.pi / 2, abs=1e-15)

    def test_not_a_triangle(self, h_triangle):
        with pytest.raises(NotATriangle):
            triangle_angles(h_triangle, 0.1)

    def test_degenerate(self, h_triangle):
        v = triangle_profile(h_triangle).a_radius
        with pytest.raises(DegenerateTriangle):
            triangle_angles(h_triangle, v, DEFAULT_TOL)
