import math

import numpy as np
import pytest
from hypothesis import HealthCheck, settings

from harmtri.core import HarmonicTrinomial

settings.register_profile("harmtri", deadline=None, max_examples=40, derandomize=True,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("harmtri")


@pytest.fixture
def h_bdominant():
    """z^4 - 5 conj(z)^3 + 2: counts 0, 3, 10 below 0.5, 2, 6."""
    return HarmonicTrinomial(1, -5, 2, 1, 3)


@pytest.fixture
def h_triangle():
    """z^3 + conj(z) + sqrt(2)."""
    return HarmonicTrinomial(1, 1, math.sqrt(2), 2, 1)


@pytest.fixture
def h_eleven():
    """z^5 + 6 conj(z)^3 + 1, the maximal 11-root example."""
    return HarmonicTrinomial(1, 6, 1, 2, 3)


@pytest.fixture
def h_pair():
    """z^3 - conj(z) + (1/3)^(3/2), with an equal-modulus pair near 1.0046."""
    return HarmonicTrinomial(1, -1, (1 / 3) ** 1.5, 2, 1)


def random_trinomial(rng, max_n=4, max_m=3, real=False):
    """Random coprime instance with b, c of modulus in [0.1, 10]."""
    while True:
        n = int(rng.integers(1, max_n + 1))
        m = int(rng.integers(1, max_m + 1))
        if math.gcd(n, m) == 1:
            break
    coeffs = []
    for _ in range(3):
        r = 10 ** rng.uniform(-1, 1)
        if real:
            coeffs.append(r * rng.choice([-1.0, 1.0]))
        else:
            coeffs.append(r * np.exp(1j * rng.uniform(0, 2 * np.pi)))
    return HarmonicTrinomial(coeffs[0], coeffs[1], coeffs[2], n, m)


_ACCEPTANCE = []


@pytest.fixture
def acceptance_log():
    """Collects (number, ok, detail, seconds) per acceptance criterion."""
    return _ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, detail, elapsed in sorted(_ACCEPTANCE):
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'} ({elapsed:.2f} s) {detail}")
