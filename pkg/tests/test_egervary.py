import cmath

import numpy as np
import pytest

from harmtri.core import HarmonicTrinomial
from harmtri.egervary import is_equivalent, negate_variable, rescale_to_unit_c, transform
from harmtri.errors import DegenerateCoefficient, ExponentMismatch
from harmtri.roots import find_all_roots

H1 = HarmonicTrinomial(1, 3, 2, 3, 2)
H2 = HarmonicTrinomial(2, -6, -4, 3, 2)


def test_scaled_pair_is_equivalent():
    w = is_equivalent(H1, H2)
    assert w.equivalent
    assert w.branch == "direct"
    assert w.ratio == pytest.approx(0.5)
    assert w.congruence_defect == pytest.approx(0.0, abs=1e-12)


def test_gamma_perturbation_breaks_equivalence():
    # shifting arg(c) by 0.01 moves the congruence by (n + 2m) * 0.01 = 0.07
    h = H2.with_coefficients(c=H2.c * cmath.exp(0.01j))
    w = is_equivalent(H1, h)
    assert not w.equivalent
    assert w.branch == "none"
    assert w.direct_defect == pytest.approx(0.07, abs=1e-12)


def test_identical():
    w = is_equivalent(H1, H1)
    assert w.equivalent and w.congruence_defect == 0.0


def test_ratio_mismatch():
    w = is_equivalent(H1, H1.with_coefficients(b=3.1))
    assert not w.ratio_consistent and not w.equivalent


def test_exponent_mismatch():
    with pytest.raises(ExponentMismatch):
        is_equivalent(H1, HarmonicTrinomial(1, 3, 2, 2, 3))


def test_zero_coefficient():
    with pytest.raises(DegenerateCoefficient):
        is_equivalent(H1, H1.with_coefficients(b=0))


@pytest.mark.parametrize("conjugate", [False, True])
def test_transform_family_detected(conjugate):
    rng = np.random.default_rng(11 + conjugate)
    for _ in range(25):
        h = HarmonicTrinomial(*(rng.normal(size=3) + 1j * rng.normal(size=3)), 3, 2)
        k = complex(*rng.normal(size=2))
        g = transform(h, k, rng.uniform(0, 2 * np.pi), conjugate)
        w = is_equivalent(h, g)
        assert w.equivalent
        if not conjugate:
            assert w.direct_defect <= 1e-9


def test_transform_maps_roots():
    h = HarmonicTrinomial(1, 6, 1, 2, 3)
    delta = 0.3
    g = transform(h, 2 - 1j, delta)
    # roots of g are e^(-i delta) times roots of h
    rh = np.sort_complex(find_all_roots(h).values * cmath.exp(-1j * delta))
    rg = np.sort_complex(find_all_roots(g).values)
    assert np.sort(np.abs(rg)) == pytest.approx(np.sort(np.abs(rh)), abs=1e-9)
    for z in rh:
        assert np.min(np.abs(rg - z)) < 1e-9


def test_rescale_to_unit_c():
    g, scale = rescale_to_unit_c(HarmonicTrinomial(1, 2, 8, 2, 1))
    assert scale == pytest.approx(2.0)
    assert g.b == pytest.approx(0.5)
    assert g.c == pytest.approx(1.0)


def test_rescale_preserves_moduli():
    h = HarmonicTrinomial(1, 2, 8, 2, 1)
    g, scale = rescale_to_unit_c(h)
    assert find_all_roots(h).moduli == pytest.approx(scale * find_all_roots(g).moduli, rel=1e-9)


def test_negate_variable():
    h = HarmonicTrinomial(1, 6, 1, 2, 3)
    g = negate_variable(h)
    z = 0.4 + 0.9j
    assert g(z) == pytest.approx(h(-z))
    assert find_all_roots(g).moduli == pytest.approx(find_all_roots(h).moduli, abs=1e-9)
