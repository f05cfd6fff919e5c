"""Data model for harmonic trinomials and their radial triangle geometry.

A harmonic trinomial is ``h(z) = a z^(n+m) + b conj(z)^m + c`` with coprime
positive exponents.  On the circle ``|z| = v`` the three terms have moduli
``sA = |a| v^(n+m)``, ``sB = |b| v^m`` and ``sC = |c|``; a root on that circle
can only exist if the three lengths close up into a triangle.  This module
computes those lengths, the radial polynomials ``A, B, C`` whose signs tell
which term dominates, and the radii where the dominance changes.
"""

import cmath
import math
from dataclasses import dataclass, field, asdict
from typing import Optional

import numpy as np
from scipy.optimize import bisect

from .errors import (
    DegenerateCoefficient,
    DegenerateTriangle,
    InvalidTrinomial,
    NotATriangle,
)

TWO_PI = 2.0 * math.pi


def arg(z) -> float:
    """Argument of ``z`` in [0, 2pi)."""
    t = cmath.phase(complex(z)) % TWO_PI
    return 0.0 if t >= TWO_PI else t


def circular_distance(x: float, period: float = TWO_PI) -> float:
    """Distance from ``x`` to the nearest multiple of ``period``."""
    r = math.fmod(x, period)
    r = abs(r)
    return min(r, period - r)


def integer_distance(x: float) -> float:
    return abs(x - round(x))


@dataclass(frozen=True)
class Tolerances:
    """Numerical thresholds shared by every analysis.

    Attributes
    ----------
    residual : float
        Largest relative ``|h(z)|`` accepted at a root.
    modulus_group : float
        Two root moduli closer than this are treated as equal.
    angular : float
        Radians; ray membership and congruence tests.
    boundary_band : float
        Relative exclusion band around degenerate radii.
    """

    residual: float = 1e-10
    modulus_group: float = 1e-7
    angular: float = 1e-9
    boundary_band: float = 1e-8

    def __post_init__(self):
        for name, value in asdict(self).items():
            if not (math.isfinite(value) and value > 0):
                raise ValueError(f"tolerance {name} must be positive and finite, got {value!r}")

    @classmethod
    def from_dict(cls, data):
        unknown = set(data) - set(cls.__dataclass_fields__)
        if unknown:
            raise ValueError(f"unknown tolerance keys: {sorted(unknown)}")
        return cls(**{k: float(v) for k, v in data.items()})

    def to_dict(self):
        return asdict(self)


DEFAULT_TOL = Tolerances()


def _as_complex(value, name):
    try:
        z = complex(value)
    except (TypeError, ValueError) as exc:
        raise InvalidTrinomial(f"coefficient {name} is not a complex number: {value!r}") from exc
    z = complex(z.real + 0.0, z.imag + 0.0)  # drop negative zeros
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise InvalidTrinomial(f"coefficient {name} must be finite, got {z!r}")
    return z


@dataclass(frozen=True)
class HarmonicTrinomial:
    """``h(z) = a z^(n+m) + b conj(z)^m + c`` with gcd(n, m) = 1 and a != 0."""

    a: complex
    b: complex
    c: complex
    n: int
    m: int

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, _as_complex(getattr(self, name), name))
        for name in ("n", "m"):
            value = getattr(self, name)
            if isinstance(value, bool) or int(value) != value:
                raise InvalidTrinomial(f"exponent {name} must be an integer, got {value!r}")
            object.__setattr__(self, name, int(value))
        if self.n < 1 or self.m < 1:
            raise InvalidTrinomial(f"exponents must satisfy n >= 1 and m >= 1, got n={self.n}, m={self.m}")
        if math.gcd(self.n, self.m) != 1:
            raise InvalidTrinomial(f"exponents must be coprime, gcd({self.n}, {self.m}) = {math.gcd(self.n, self.m)}")
        if self.a == 0:
            raise InvalidTrinomial("leading coefficient a must be nonzero")

    @property
    def degree(self) -> int:
        """Degree ``n + m`` of the analytic part."""
        return self.n + self.m

    @property
    def max_roots(self) -> int:
        return self.n + 3 * self.m

    @property
    def alpha(self) -> float:
        return arg(self.a)

    @property
    def beta(self) -> float:
        return arg(self.b)

    @property
    def gamma(self) -> float:
        return arg(self.c)

    def __call__(self, z):
        z = np.asarray(z, dtype=np.complex128)
        out = self.a * z ** self.degree + self.b * np.conj(z) ** self.m + self.c
        return complex(out) if out.ndim == 0 else out

    def scale(self, modulus):
        """Magnitude scale ``max(1, sA, sB, sC)`` used for relative residuals."""
        return np.maximum.reduce([
            np.ones_like(np.asarray(modulus, dtype=float)),
            abs(self.a) * np.asarray(modulus, dtype=float) ** self.degree,
            abs(self.b) * np.asarray(modulus, dtype=float) ** self.m,
            np.full_like(np.asarray(modulus, dtype=float), abs(self.c)),
        ])

    def normalized(self) -> "HarmonicTrinomial":
        """Divide through by ``a`` so the leading coefficient is 1."""
        return HarmonicTrinomial(1.0, self.b / self.a, self.c / self.a, self.n, self.m)

    def with_coefficients(self, a=None, b=None, c=None) -> "HarmonicTrinomial":
        return HarmonicTrinomial(self.a if a is None else a, self.b if b is None else b,
                                 self.c if c is None else c, self.n, self.m)

    def to_dict(self):
        return {
            "a": [self.a.real, self.a.imag],
            "b": [self.b.real, self.b.imag],
            "c": [self.c.real, self.c.imag],
            "n": self.n,
            "m": self.m,
        }

    @classmethod
    def from_dict(cls, data):
        try:
            coeffs = {}
            for key in ("a", "b", "c"):
                value = data.get(key, [1.0, 0.0] if key == "a" else [0.0, 0.0])
                if isinstance(value, (int, float)):
                    value = [value, 0.0]
                re, im = value
                coeffs[key] = complex(float(re), float(im))
            return cls(coeffs["a"], coeffs["b"], coeffs["c"], data["n"], data["m"])
        except KeyError as exc:
            raise InvalidTrinomial(f"trinomial spec is missing key {exc.args[0]!r}") from exc
        except (TypeError, ValueError) as exc:
            if isinstance(exc, InvalidTrinomial):
                raise
            raise InvalidTrinomial(f"malformed trinomial spec: {exc}") from exc

    def __str__(self):
        def fmt(z):
            return f"({z.real:g}{z.imag:+g}i)"
        return f"{fmt(self.a)} z^{self.degree} + {fmt(self.b)} conj(z)^{self.m} + {fmt(self.c)}"


def side_lengths(h: HarmonicTrinomial, v: float):
    """Moduli ``(|a| v^(n+m), |b| v^m, |c|)`` of the three terms on ``|z| = v``."""
    return abs(h.a) * v ** h.degree, abs(h.b) * v ** h.m, abs(h.c)


def radial_polynomials(h: HarmonicTrinomial, v: float):
    """Return ``(A, B, C)`` where each is one side minus the other two.

    ``A > 0`` means the analytic term dominates, ``B > 0`` the anti-analytic
    term and ``C > 0`` the constant.  All three negative is the triangle case.
    """
    sA, sB, sC = side_lengths(h, v)
    return sA - sB - sC, -sA + sB - sC, -sA - sB + sC


@dataclass(frozen=True)
class TriangleProfile:
    """Radii bounding the region where the three side lengths form a triangle.

    ``c_radius`` is where the constant stops dominating, ``a_radius`` where the
    leading term starts to.  ``b_kind`` is ``"none"``, ``"double"`` or ``"pair"``
    and ``b_radii`` holds 0, 1 or 2 radii where ``B`` vanishes.  ``b_peak`` is
    the maximiser of ``B`` (it equals the critical-circle radius).
    """

    c_radius: float
    a_radius: float
    b_kind: str
    b_radii: tuple = field(default=())
    b_peak: Optional[float] = None

    def breakpoints(self):
        """Sorted radii at which the regime or piecewise shape of w* can change."""
        return (self.c_radius, *self.b_radii, self.a_radius)

    def to_dict(self):
        return {
            "c_radius": self.c_radius,
            "a_radius": self.a_radius,
            "b_kind": self.b_kind,
            "b_radii": list(self.b_radii),
            "b_peak": self.b_peak,
        }


def _bisect_root(f, lo, hi):
    flo, fhi = f(lo), f(hi)
    if flo == 0:
        return lo
    if fhi == 0:
        return hi
    return bisect(f, lo, hi, xtol=1e-300, rtol=1e-14, maxiter=2000)


def _grow_until(pred, start=1.0):
    hi = start
    while not pred(hi):
        hi *= 2.0
    return hi


def b_peak_radius(h: HarmonicTrinomial) -> float:
    """Radius ``(m|b| / ((n+m)|a|))^(1/n)`` maximising ``B``."""
    if h.b == 0:
        raise DegenerateCoefficient("b = 0 has no interior maximum of B")
    return (h.m * abs(h.b) / (h.degree * abs(h.a))) ** (1.0 / h.n)


def triangle_profile(h: HarmonicTrinomial, tol: Tolerances = DEFAULT_TOL) -> TriangleProfile:
    """Locate the radii 𝔠 < (𝔟1 <= 𝔟2) < 𝔞 where ``C``, ``B`` and ``A`` vanish."""
    if h.b == 0 or h.c == 0:
        raise DegenerateCoefficient("triangle profile needs b != 0 and c != 0")

    def A(v):
        return radial_polynomials(h, v)[0]

    def B(v):
        return radial_polynomials(h, v)[1]

    def C(v):
        return radial_polynomials(h, v)[2]

    a_rad = _bisect_root(A, 0.0, _grow_until(lambda v: A(v) > 0))
    c_rad = _bisect_root(C, 0.0, _grow_until(lambda v: C(v) < 0))
    v_star = b_peak_radius(h)
    peak = B(v_star)
    if abs(peak) <= tol.residual * max(1.0, side_lengths(h, v_star)[0]):
        return TriangleProfile(c_rad, a_rad, "double", (v_star,), v_star)
    if peak < 0:
        return TriangleProfile(c_rad, a_rad, "none", (), v_star)
    b1 = _bisect_root(B, c_rad, v_star)
    b2 = _bisect_root(B, v_star, a_rad)
    return TriangleProfile(c_rad, a_rad, "pair", (b1, b2), v_star)


def triangle_angles(h: HarmonicTrinomial, v: float, tol: Tolerances = DEFAULT_TOL):
    """Angles opposite the sides ``sA`` and ``sB`` of the triangle at radius ``v``.

    Raises
    ------
    NotATriangle
        One side exceeds the sum of the other two by more than the band.
    DegenerateTriangle
        A triangle equality holds within the band.
    """
    sA, sB, sC = side_lengths(h, v)
    worst = max(radial_polynomials(h, v))
    band = tol.boundary_band * (sA + sB + sC)
    if worst > band:
        raise NotATriangle(f"sides ({sA:.6g}, {sB:.6g}, {sC:.6g}) at v={v:.6g} form no triangle")
    if worst >= -band:
        raise DegenerateTriangle(f"sides ({sA:.6g}, {sB:.6g}, {sC:.6g}) at v={v:.6g} are collinear")
    w1, w2 = _angles(sA, sB, sC)
    return float(w1), float(w2)


def _angles(sA, sB, sC):
    w1 = np.arccos(np.clip((sB * sB + sC * sC - sA * sA) / (2.0 * sB * sC), -1.0, 1.0))
    w2 = np.arccos(np.clip((sA * sA + sC * sC - sB * sB) / (2.0 * sA * sC), -1.0, 1.0))
    return w1, w2
