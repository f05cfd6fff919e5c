"""Counting the roots of a harmonic trinomial inside a disk.

For a root ``z = u e^(i theta)`` the three terms of ``h`` must cancel, so the
side lengths at radius ``u`` form a (possibly degenerate) triangle whose
angles fix ``theta``.  Eliminating ``theta`` leaves one condition per
orientation of the triangle::

    P* - w*(u) in Z      or      P* + w*(u) in Z

where ``P*`` is a constant built from the coefficient arguments and ``w*`` is
a continuous function of the radius.  Counting roots of modulus ``< v`` is
therefore counting how often ``P* -+ w*(u)`` hits an integer for ``u < v``.
``w*`` is only piecewise smooth and need not be monotone, so we split it into
monotone pieces and count integer crossings on each one, plus the roots that
sit exactly at the regime boundaries.
"""

import enum
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from .core import (
    DEFAULT_TOL,
    HarmonicTrinomial,
    Tolerances,
    _angles,
    integer_distance,
    radial_polynomials,
    side_lengths,
    triangle_profile,
)
from .errors import DegenerateCoefficient, OnBoundary

INT_TOL = 1e-12
DEFAULT_SAMPLES = 4096


class Regime(enum.Enum):
    CDominant = "CDominant"
    ADominant = "ADominant"
    BDominant = "BDominant"
    Triangle = "Triangle"
    DegenerateBoundary = "DegenerateBoundary"


def regime(h: HarmonicTrinomial, v: float, tol: Tolerances = DEFAULT_TOL) -> Regime:
    """Which of the three terms dominates on ``|z| = v``, if any."""
    A, B, C = radial_polynomials(h, v)
    band = tol.boundary_band * sum(side_lengths(h, v))
    if min(abs(A), abs(B), abs(C)) <= band:
        return Regime.DegenerateBoundary
    if C > 0:
        return Regime.CDominant
    if A > 0:
        return Regime.ADominant
    if B > 0:
        return Regime.BDominant
    return Regime.Triangle


def regime_count(h: HarmonicTrinomial, v: float, tol: Tolerances = DEFAULT_TOL):
    """Root count below ``v`` when it follows from the regime alone, else None.

    The constant-dominant regime has no roots inside and the anti-analytic
    dominant regime has exactly ``m``.  When the leading term dominates the
    disk contains every root, but the total is not fixed by the regime
    (z^3 + conj(z) + sqrt(2) has 3 roots, not n + 3m = 5), so None is returned.
    """
    r = regime(h, v, tol)
    if r is Regime.CDominant:
        return 0
    if r is Regime.BDominant:
        return h.m
    return None


def pivot(h: HarmonicTrinomial) -> float:
    """The pivot ``P* = ((n+m)(beta-gamma-pi) + m(alpha-gamma-pi)) / (2 pi)``.

    Arguments are taken in [0, 2pi).  Another branch shifts ``P*`` by an
    integer, which leaves every count unchanged.
    """
    if h.a == 0 or h.b == 0 or h.c == 0:
        raise DegenerateCoefficient("pivot needs a, b, c all nonzero")
    n, m = h.n, h.m
    return ((n + m) * (h.beta - h.gamma - math.pi) + m * (h.alpha - h.gamma - math.pi)) / (2.0 * math.pi)


def w_star_array(h: HarmonicTrinomial, u) -> np.ndarray:
    """Vectorised angle function ``w*`` (continuously extended outside the triangle)."""
    u = np.asarray(u, dtype=float)
    n, m = h.n, h.m
    sA = abs(h.a) * u ** (n + m)
    sB = abs(h.b) * u ** m
    sC = np.full_like(sA, abs(h.c))
    out = np.empty_like(sA)
    c_dom = sC >= sA + sB
    a_dom = ~c_dom & (sA >= sB + sC)
    b_dom = ~c_dom & ~a_dom & (sB >= sA + sC)
    tri = ~(c_dom | a_dom | b_dom)
    out[c_dom] = 0.0
    out[a_dom] = (n + m) / 2.0
    out[b_dom] = -m / 2.0
    if tri.any():
        w1, w2 = _angles(sA[tri], sB[tri], sC[tri])
        out[tri] = ((n + m) * w1 - m * w2) / (2.0 * math.pi)
    return out


def w_star(h: HarmonicTrinomial, v: float) -> float:
    """``((n+m) w1 - m w2) / (2 pi)`` in the triangle regime, else its plateau value.

    ``w1`` and ``w2`` are the angles opposite ``|a| v^(n+m)`` and ``|b| v^m``.
    The plateaus are 0 (constant dominant), (n+m)/2 (leading term dominant)
    and -m/2 (anti-analytic term dominant).
    """
    if h.b == 0 or h.c == 0:
        raise DegenerateCoefficient("w* needs b != 0 and c != 0")
    return float(w_star_array(h, np.array([float(v)]))[0])


def _triangle_intervals(profile):
    """Sub-intervals of (c_radius, a_radius) on which w* is smooth."""
    c_r, a_r = profile.c_radius, profile.a_radius
    if profile.b_kind == "none":
        return [(c_r, a_r)]
    if profile.b_kind == "double":
        return [(c_r, profile.b_radii[0]), (profile.b_radii[0], a_r)]
    return [(c_r, profile.b_radii[0]), (profile.b_radii[1], a_r)]


def _boundary_value(h, profile, u):
    """Exact w* at a profile radius (avoids arccos round-off at degenerate triangles)."""
    if u == profile.c_radius:
        return 0.0
    if u == profile.a_radius:
        return (h.n + h.m) / 2.0
    if u in profile.b_radii:
        return -h.m / 2.0
    return None


@dataclass
class _Knots:
    """Monotone decomposition of w* on (0, v): knot radii and values.

    Each piece ``(u0, u1, w0, w1)`` is monotone; ``extrema`` lists the
    interior turning points, where a tangency can hide a root.
    """

    pieces: list = field(default_factory=list)   # (u0, u1, w0, w1)
    extrema: list = field(default_factory=list)  # (u, w)


def _monotone_pieces(h, profile, v, samples):
    knots = _Knots()
    for lo, hi in _triangle_intervals(profile):
        if lo >= v:
            continue
        hi_c = min(hi, v)
        if hi_c <= lo:
            continue
        t = np.linspace(0.0, 1.0, samples)
        u = lo + (hi_c - lo) * 0.5 * (1.0 - np.cos(np.pi * t))
        w = w_star_array(h, u)
        for idx, end in ((0, lo), (-1, hi_c)):
            exact = _boundary_value(h, profile, end)
            if exact is not None:
                w[idx] = exact
        d = np.diff(w)
        sgn = np.sign(d)
        # carry the previous sign through flat steps so plateaus do not fake extrema
        for i in range(1, len(sgn)):
            if sgn[i] == 0:
                sgn[i] = sgn[i - 1]
        turns = np.flatnonzero(sgn[1:] * sgn[:-1] < 0) + 1
        ext_u, ext_w = [], []
        for i in turns:
            sign = -1.0 if sgn[i - 1] > 0 else 1.0  # minimise -w at a maximum
            a_, b_ = u[i - 1], u[i + 1]
            res = minimize_scalar(
                lambda x: sign * w_star_array(h, np.array([x]))[0],
                bounds=(a_, b_), method="bounded",
                options={"xatol": 1e-12 * max(1.0, b_)},
            )
            ue = float(res.x)
            we = float(w_star_array(h, np.array([ue]))[0])
            if sign * we > sign * w[i]:
                ue, we = float(u[i]), float(w[i])
            ext_u.append(ue)
            ext_w.append(we)
        us = [lo, *ext_u, hi_c]
        ws = [float(w[0]), *ext_w, float(w[-1])]
        for k in range(len(us) - 1):
            knots.pieces.append((us[k], us[k + 1], ws[k], ws[k + 1]))
        knots.extrema.extend(zip(ext_u, ext_w))
    return knots


def w_star_range(h: HarmonicTrinomial, v: float, samples: int = DEFAULT_SAMPLES, profile=None):
    """Infimum and supremum of ``w*`` over ``u in (0, v)``."""
    if h.b == 0 or h.c == 0:
        raise DegenerateCoefficient("w* needs b != 0 and c != 0")
    profile = profile or triangle_profile(h)
    values = [0.0]
    knots = _monotone_pieces(h, profile, v, samples)
    for _, _, w0, w1 in knots.pieces:
        values.extend((w0, w1))
    values.extend(w for _, w in knots.extrema)
    if profile.b_kind == "pair" and profile.b_radii[0] < v:
        values.append(-h.m / 2.0)
    if profile.a_radius < v:
        values.append((h.n + h.m) / 2.0)
    return min(values), max(values)


def _card_open(lo, hi):
    """Number of integers strictly inside (lo, hi), endpoints within INT_TOL excluded."""
    if hi <= lo:
        return 0
    first = math.floor(lo) + 1
    last = math.ceil(hi) - 1
    count = 0
    for k in range(first, last + 1):
        if lo + INT_TOL < k < hi - INT_TOL:
            count += 1
    return count


def _is_int(x):
    return integer_distance(x) <= INT_TOL


@dataclass(frozen=True)
class BohlCount:
    """Result of :func:`bohl_analysis` with the intermediate quantities."""

    v: float
    regime: Regime
    count: int
    p_star: float
    w_star_at_v: float
    w_star_range: tuple
    method: str
    crossings: int
    tangencies: int
    boundary_roots: int
    image_formula_count: int

    def to_dict(self):
        return {
            "v": self.v,
            "regime": self.regime.value,
            "count": self.count,
            "p_star": self.p_star,
            "w_star_at_v": self.w_star_at_v,
            "w_star_range": list(self.w_star_range),
            "method": self.method,
            "crossings": self.crossings,
            "tangencies": self.tangencies,
            "boundary_roots": self.boundary_roots,
            "image_formula_count": self.image_formula_count,
        }


def _check_admissible(h, profile, v, p, wv, reg, tol):
    band = tol.boundary_band
    for r in profile.b_radii:
        if abs(v - r) <= band * r:
            raise OnBoundary(f"v={v!r} lies on a B-radius {r!r}", v=v, reason="b_radius")
    if abs(v - profile.c_radius) <= band * profile.c_radius and _is_int(p):
        raise OnBoundary(f"v={v!r} is the modulus of a root at the C-radius", v=v, reason="root_modulus")
    if abs(v - profile.a_radius) <= band * profile.a_radius and _is_int(p + (h.n + h.m) / 2.0):
        raise OnBoundary(f"v={v!r} is the modulus of a root at the A-radius", v=v, reason="root_modulus")
    if reg in (Regime.Triangle, Regime.DegenerateBoundary) and profile.c_radius < v < profile.a_radius:
        gap = band * (h.n + 2 * h.m)
        if integer_distance(p - wv) <= gap or integer_distance(p + wv) <= gap:
            raise OnBoundary(f"v={v!r} is (numerically) the modulus of a root", v=v, reason="root_modulus")


def bohl_analysis(h: HarmonicTrinomial, v: float, tol: Tolerances = DEFAULT_TOL,
                  samples: int = DEFAULT_SAMPLES) -> BohlCount:
    """Count roots of ``h`` with modulus ``< v`` and return the working.

    Raises
    ------
    DegenerateCoefficient
        If ``b`` or ``c`` is zero.
    OnBoundary
        If ``v`` is a B-radius or (numerically) the modulus of a root.
    """
    if h.b == 0 or h.c == 0:
        raise DegenerateCoefficient("root counting needs b != 0 and c != 0")
    v = float(v)
    if not v > 0:
        raise ValueError(f"radius must be positive, got {v!r}")
    profile = triangle_profile(h, tol)
    p = pivot(h)
    wv = w_star(h, v)
    reg = regime(h, v, tol)
    _check_admissible(h, profile, v, p, wv, reg, tol)

    knots = _monotone_pieces(h, profile, v, samples)
    crossings = tangencies = 0
    for s in (1.0, -1.0):
        for _, _, w0, w1 in knots.pieces:
            f0, f1 = p - s * w0, p - s * w1
            crossings += _card_open(min(f0, f1), max(f0, f1))
        tangencies += sum(1 for _, we in knots.extrema if _is_int(p - s * we))
    boundary = 0
    if profile.c_radius < v and _is_int(p):
        boundary += 1
    boundary += sum(1 for r in profile.b_radii if r < v and _is_int(p + h.m / 2.0))
    if profile.a_radius < v and _is_int(p + (h.n + h.m) / 2.0):
        boundary += 1
    total = crossings + tangencies + boundary

    lo, hi = w_star_range(h, v, samples, profile)
    image = _card_open(p - hi, p - lo) + _card_open(p + lo, p + hi) + (1 if _is_int(p) else 0)

    determined = regime_count(h, v, tol)
    method = "crossing"
    if determined is not None:
        method = "regime"
        total = determined
    return BohlCount(v, reg, total, p, wv, (lo, hi), method, crossings, tangencies, boundary, image)


def count_roots_below(h: HarmonicTrinomial, v: float, tol: Tolerances = DEFAULT_TOL,
                      samples: int = DEFAULT_SAMPLES) -> int:
    """Number of distinct roots of ``h`` with modulus strictly less than ``v``."""
    return bohl_analysis(h, v, tol, samples).count


def nearest_admissible(h: HarmonicTrinomial, v: float, tol: Tolerances = DEFAULT_TOL):
    """Closest radii below and above ``v`` where :func:`count_roots_below` is defined."""
    found = []
    for direction in (-1.0, 1.0):
        step = 4.0 * tol.boundary_band
        candidate = None
        for _ in range(60):
            u = v * (1.0 + direction * step)
            if u <= 0:
                break
            try:
                bohl_analysis(h, u, tol, samples=256)
            except OnBoundary:
                step *= 2.0
                continue
            candidate = u
            break
        found.append(candidate)
    return tuple(found)


__all__ = [
    "Regime",
    "BohlCount",
    "regime",
    "regime_count",
    "pivot",
    "w_star",
    "w_star_array",
    "w_star_range",
    "bohl_analysis",
    "count_roots_below",
    "nearest_admissible",
]
