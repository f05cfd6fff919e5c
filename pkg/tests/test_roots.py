import cmath
import json
import math

import numpy as np
import pytest
from conftest import random_trinomial

from harmtri.core import HarmonicTrinomial, b_peak_radius
from harmtri.errors import NoConvergence, SingularJacobian
from harmtri.roots import (
    MULTIPLE,
    SENSE_PRESERVING,
    SENSE_REVERSING,
    SINGULAR,
    companion_polynomial,
    find_all_roots,
    jacobian,
    moduli_spectrum,
    newton_polish,
    poly_roots,
)

ELEVEN_MODULI = [0.54163, 0.55589, 0.55589, 2.43641, 2.43641, 2.44415, 2.44415,
                 2.45478, 2.45478, 2.46209, 2.46209]
PAIR_MODULI = [0.2005, 0.8846, 1.0046, 1.0046, 1.0851]


class TestPolyRoots:
    def test_known_roots(self):
        expected = np.array([1.0, 2.0, -3j, 0.5 + 0.5j])
        got = poly_roots(np.poly(expected))
        assert np.sort_complex(got) == pytest.approx(np.sort_complex(expected), abs=1e-12)

    def test_trailing_zeros_are_exact(self):
        got = poly_roots([1.0, -1.0, 0.0, 0.0])
        assert sum(1 for x in got if x == 0) == 2
        assert any(abs(x - 1) < 1e-14 for x in got)

    def test_constant(self):
        assert len(poly_roots([3.0])) == 0

    def test_zero_leading(self):
        with pytest.raises(ValueError):
            poly_roots([0.0, 1.0])

    def test_high_degree_unity(self):
        got = poly_roots([1.0] + [0.0] * 29 + [-1.0])
        assert np.abs(got) == pytest.approx(np.ones(30), abs=1e-12)


class TestCompanion:
    def test_roots_of_h_solve_companion(self, h_eleven):
        for r in find_all_roots(h_eleven):
            p = companion_polynomial(h_eleven, r.modulus)
            scale = np.sum(np.abs(p) * r.modulus ** np.arange(len(p) - 1, -1, -1))
            assert abs(np.polyval(p, r.value)) <= 1e-12 * scale

    def test_shape(self, h_eleven):
        p = companion_polynomial(h_eleven, 2.0)
        assert len(p) == h_eleven.n + 2 * h_eleven.m + 1
        assert p[0] == 1 and p[-1] == 6 * 2.0 ** 6 and p[-1 - h_eleven.m] == 1


class TestNewton:
    def test_polish_recovers_root(self, h_triangle):
        z = find_all_roots(h_triangle)[0].value
        polished = newton_polish(h_triangle, z * (1 + 1e-4) + 1e-4j)
        assert polished == pytest.approx(z, abs=1e-12)

    def test_singular_jacobian(self):
        # z^2 + (2 sqrt3 / 3) conj(z) - 1 has a double root on the critical circle at sqrt3/3
        h = HarmonicTrinomial(1, 2 * math.sqrt(3) / 3, -1, 1, 1)
        z = math.sqrt(3) / 3
        assert abs(jacobian(h, z)) <= 1e-14
        with pytest.raises((SingularJacobian, NoConvergence)):
            newton_polish(h, z + 1e-3j * z, maxiter=3)

    def test_jacobian_zero_on_critical_circle(self, h_eleven):
        r = b_peak_radius(h_eleven)
        for t in np.linspace(0, 2 * np.pi, 64, endpoint=False):
            f2 = (5 * r ** 4) ** 2
            assert abs(jacobian(h_eleven, r * cmath.exp(1j * t))) <= 1e-10 * f2

    def test_jacobian_sign(self, h_eleven):
        assert jacobian(h_eleven, 0.1) < 0 < jacobian(h_eleven, 3.0)


class TestOracle:
    def test_eleven_root_spectrum(self, h_eleven):
        roots = find_all_roots(h_eleven)
        assert len(roots) == 11
        assert roots.moduli == pytest.approx(ELEVEN_MODULI, abs=1e-4)
        assert roots.diagnostics["consistent"]
        assert roots.diagnostics["index_sum"] == 5

    def test_equal_modulus_pair(self, h_pair):
        roots = find_all_roots(h_pair)
        assert roots.moduli == pytest.approx(PAIR_MODULI, abs=1e-3)
        sizes = [len(g) for g in roots.groups]
        assert sizes == [1, 1, 2, 1]
        # individual roots listed in the same example
        vals = sorted(roots.values, key=lambda z: (round(z.real, 3), z.imag))
        assert vals[0] == pytest.approx(-1.0851, abs=1e-4)
        assert vals[1] == pytest.approx(0.0479 - 1.0034j, abs=1e-4)
        assert vals[2] == pytest.approx(0.0479 + 1.0034j, abs=1e-4)

    def test_orientation(self, h_eleven):
        roots = find_all_roots(h_eleven)
        r_c = b_peak_radius(h_eleven)
        for r in roots:
            expected = SENSE_PRESERVING if r.modulus > r_c else SENSE_REVERSING
            assert r.orientation == expected
            assert r.residual <= 1e-10

    def test_double_root_on_critical_circle(self):
        h = HarmonicTrinomial(1, -1.5, 0.5, 1, 2)
        roots = find_all_roots(h)
        at_one = [r for r in roots if abs(r.value - 1) < 1e-6]
        assert len(at_one) == 1
        assert at_one[0].orientation == SINGULAR
        assert at_one[0].multiplicity_class == MULTIPLE
        assert abs(at_one[0].jacobian) <= 1e-9

    def test_closed_form_b_zero(self):
        h = HarmonicTrinomial(1, 0, 1, 2, 1)  # z^3 + 1
        roots = find_all_roots(h)
        assert roots.method == "closed_form_b0"
        assert len(roots) == 3
        assert roots.moduli == pytest.approx([1, 1, 1], abs=1e-14)
        assert sorted(np.round(roots.values, 12), key=lambda z: z.imag) == pytest.approx(
            [0.5 - math.sqrt(3) / 2 * 1j, -1, 0.5 + math.sqrt(3) / 2 * 1j])

    def test_closed_form_c_zero(self):
        h = HarmonicTrinomial(1, 2, 0, 1, 2)  # z^3 + 2 conj(z)^2
        roots = find_all_roots(h)
        assert roots.method == "closed_form_c0"
        assert roots.diagnostics["extension"]
        assert len(roots) == 1 + 5
        for r in roots:
            assert abs(h(r.value)) <= 1e-12 * max(1, r.modulus ** 3)

    def test_zero_trinomial_tail(self):
        roots = find_all_roots(HarmonicTrinomial(1, 0, 0, 2, 1))
        assert len(roots) == 1 and roots[0].value == 0

    def test_spectrum(self, h_pair):
        spec = moduli_spectrum(h_pair)
        assert [c for _, c in spec] == [1, 1, 2, 1]
        assert spec[2][0] == pytest.approx(1.0046, abs=1e-4)

    def test_random_instances_residual_and_bounds(self):
        rng = np.random.default_rng(3)
        for _ in range(20):
            h = random_trinomial(rng)
            roots = find_all_roots(h)
            assert h.n <= len(roots) <= h.n + 3 * h.m
            for r in roots:
                assert abs(h(r.value)) <= 1e-10 * float(h.scale(r.modulus))

    def test_serialisable(self, h_eleven):
        text = json.dumps(find_all_roots(h_eleven).to_dict())
        assert "sense_preserving" in text
