"""Parameter-space geometry of monic harmonic trinomials.

Fix everything but one coefficient and ask for which values the trinomial
``z^(n+m) + b conj(z)^m + c`` has a root of modulus ``v``.  Solving for the
free coefficient along ``z = v e^(i theta)`` gives a trochoid in the
coefficient plane.  Its self-intersections are coefficients with two roots of
modulus ``v``; its cusps are coefficients with a double root.  Coefficients
with two equal-modulus roots lie on a finite union of rays through 0.
"""

import cmath
import math
import numbers
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

import numpy as np
from scipy.optimize import bisect

from . import kernels
from .core import DEFAULT_TOL, TWO_PI, HarmonicTrinomial, Tolerances, arg, circular_distance, triangle_profile
from .errors import DegenerateCoefficient, InvalidGeometry

B_LOCUS = "b_locus"
C_LOCUS = "c_locus"


# ------------------------------------------------------------------ trochoids

@dataclass(frozen=True)
class TrochoidParams:
    """Rolling-circle description ``(R, r, d)`` of a coefficient locus.

    ``phase`` is the argument of the fixed coefficient (``gamma`` for the
    b-locus, ``beta`` for the c-locus).  Values are exact fractions when the
    inputs were exact rationals.
    """

    R: object
    r: object
    d: object
    phase: float
    kind: str

    def as_floats(self):
        return float(self.R), float(self.r), float(self.d)

    def to_dict(self):
        out = {"R": float(self.R), "r": float(self.r), "d": float(self.d), "phase": self.phase, "kind": self.kind}
        if all(isinstance(x, Fraction) for x in (self.R, self.r, self.d)):
            out["exact"] = [str(self.R), str(self.r), str(self.d)]
        return out


def _exact(x):
    """Keep rationals exact; everything else becomes float."""
    if isinstance(x, numbers.Rational):
        return Fraction(x)
    if isinstance(x, numbers.Complex) and not isinstance(x, numbers.Real):
        return abs(complex(x))
    return float(x)


def _modulus(x):
    if isinstance(x, numbers.Rational):
        return abs(Fraction(x))
    return abs(complex(x))


def b_locus_params(n: int, m: int, c, v) -> TrochoidParams:
    """``R = v^n (n+2m)/(2m)``, ``r = v^n n/(2m)``, ``d = |c|/v^m``, phase ``gamma``."""
    if c == 0:
        raise DegenerateCoefficient("b-locus needs c != 0")
    v = _exact(v)
    cm = _modulus(c)
    R = v ** n * (n + 2 * m) / (2 * m)
    r = v ** n * n / (2 * m)
    d = cm / v ** m
    return TrochoidParams(R, r, d, arg(complex(c)), B_LOCUS)


def c_locus_params(n: int, m: int, b, v) -> TrochoidParams:
    """``R = v^m |b| n/(n+m)``, ``r = v^m |b| m/(n+m)``, ``d = v^(n+m)``, phase ``beta``.

    Raises
    ------
    InvalidGeometry
        If ``n <= m``, since then ``R <= r``.
    """
    if b == 0:
        raise DegenerateCoefficient("c-locus needs b != 0")
    if n <= m:
        raise InvalidGeometry(f"c-locus parameters need n > m, got n={n}, m={m}")
    v = _exact(v)
    bm = _modulus(b)
    R = v ** m * bm * n / (n + m)
    r = v ** m * bm * m / (n + m)
    d = v ** (n + m)
    return TrochoidParams(R, r, d, arg(complex(b)), C_LOCUS)


@dataclass(frozen=True)
class _Epicycle:
    """``T(theta) = -(P e^(i k theta) + Q e^(i (phi + l theta)))``."""

    P: float
    k: int
    Q: float
    phi: float
    l: int

    def __call__(self, theta):
        theta = np.asarray(theta, dtype=float)
        return -(self.P * np.exp(1j * self.k * theta) + self.Q * np.exp(1j * (self.phi + self.l * theta)))

    def derivative(self, theta):
        theta = np.asarray(theta, dtype=float)
        return -1j * (self.k * self.P * np.exp(1j * self.k * theta)
                      + self.l * self.Q * np.exp(1j * (self.phi + self.l * theta)))


def _b_epicycle(n, m, c, v):
    v = float(v)
    return _Epicycle(v ** n, n + 2 * m, abs(complex(c)) / v ** m, arg(complex(c)), m)


def _c_epicycle(n, m, b, v):
    v = float(v)
    return _Epicycle(v ** (n + m), n + m, abs(complex(b)) * v ** m, arg(complex(b)), -m)


def locus_thetas(samples: int) -> np.ndarray:
    """Root arguments ``2 pi j / samples`` used by the locus samplers."""
    if samples < 16:
        raise ValueError(f"need at least 16 samples, got {samples}")
    return TWO_PI * np.arange(samples) / samples


def b_locus_curve(n: int, m: int, c, v, samples: int = 2048) -> np.ndarray:
    """Values of ``b`` for which ``v e^(i theta)`` is a root, on the theta grid."""
    return _b_epicycle(n, m, c, v)(locus_thetas(samples))


def c_locus_curve(n: int, m: int, b, v, samples: int = 2048) -> np.ndarray:
    """Values of ``c`` for which ``v e^(i theta)`` is a root, on the theta grid."""
    return _c_epicycle(n, m, b, v)(locus_thetas(samples))


@dataclass(frozen=True)
class LocusCheck:
    theta: float
    coefficient: complex
    nearest_modulus: Optional[float]
    error: float
    ok: bool

    def to_dict(self):
        return {"theta": self.theta, "coefficient": [self.coefficient.real, self.coefficient.imag],
                "nearest_modulus": self.nearest_modulus, "error": self.error, "ok": self.ok}


def verify_locus(kind: str, n: int, m: int, fixed, v, samples: int = 2048, stride: int = 32,
                 atol: float = 1e-8, tol: Tolerances = DEFAULT_TOL):
    """Solve the trinomial at every ``stride``-th locus sample and look for a root of modulus ``v``.

    The root finder knows nothing about the locus, so this checks the
    parametrisation against an independent computation.
    """
    from .roots import find_all_roots

    if kind == B_LOCUS:
        curve = b_locus_curve(n, m, fixed, v, samples)
    elif kind == C_LOCUS:
        curve = c_locus_curve(n, m, fixed, v, samples)
    else:
        raise ValueError(f"unknown locus kind {kind!r}")
    thetas = locus_thetas(samples)
    out = []
    for j in range(0, samples, stride):
        coef = complex(curve[j])
        if kind == B_LOCUS:
            h = HarmonicTrinomial(1.0, coef, fixed, n, m)
        else:
            h = HarmonicTrinomial(1.0, fixed, coef, n, m)
        mods = find_all_roots(h, tol).moduli
        if len(mods):
            near = float(mods[np.argmin(np.abs(mods - v))])
            err = abs(near - v)
        else:
            near, err = None, math.inf
        out.append(LocusCheck(float(thetas[j]), coef, near, err, bool(err <= atol * max(1.0, v))))
    return out


@dataclass(frozen=True)
class DoublePoint:
    """A self-intersection of a locus: two root arguments sharing one coefficient."""

    value: complex
    v: float
    theta1: float
    theta2: float

    def to_dict(self):
        return {"value": [self.value.real, self.value.imag], "v": self.v,
                "theta1": self.theta1, "theta2": self.theta2}


def _refine_pair(curve, t1, t2, iters=50):
    """Newton on ``T(t1) - T(t2) = 0`` as a real 2x2 system."""
    for _ in range(iters):
        F = complex(curve(t1) - curve(t2))
        d1 = complex(curve.derivative(t1))
        d2 = -complex(curve.derivative(t2))
        J = np.array([[d1.real, d2.real], [d1.imag, d2.imag]])
        try:
            step = np.linalg.solve(J, [-F.real, -F.imag])
        except np.linalg.LinAlgError:
            return None
        t1 += step[0]
        t2 += step[1]
        if np.max(np.abs(step)) < 1e-15:
            break
    if abs(curve(t1) - curve(t2)) > 1e-11 * max(1.0, abs(complex(curve(t1)))):
        return None
    return t1 % TWO_PI, t2 % TWO_PI


def locus_self_intersections(kind: str, n: int, m: int, fixed, v, samples: int = 2048):
    """Double points of the b- or c-locus at radius ``v``.

    Candidate crossings come from a segment-pair test on the sampled polyline
    and are then refined with Newton's method on ``T(theta1) = T(theta2)``.
    """
    curve = _b_epicycle(n, m, fixed, v) if kind == B_LOCUS else _c_epicycle(n, m, fixed, v)
    thetas = locus_thetas(samples)
    pts = curve(thetas)
    ii, jj, ss, tt = kernels.segment_intersections(pts.real, pts.imag, True, 1e-9)
    step = TWO_PI / samples
    found = []
    for i, j, s, t in zip(ii, jj, ss, tt):
        res = _refine_pair(curve, thetas[i] + s * step, thetas[j] + t * step)
        if res is None:
            continue
        t1, t2 = sorted(res)
        if circular_distance(t1 - t2) < 1e-7:
            continue
        value = complex(curve(t1))
        if any(abs(value - p.value) <= 1e-9 * max(1.0, abs(value)) and abs(t1 - p.theta1) < 1e-7 for p in found):
            continue
        found.append(DoublePoint(value, float(v), float(t1), float(t2)))
    found.sort(key=lambda p: (p.theta1, p.theta2))
    return found


# ----------------------------------------------------------------------- rays

@dataclass(frozen=True)
class Ray:
    angle: float
    k: int
    parity: str

    def to_dict(self):
        return {"angle": self.angle, "k": self.k, "parity": self.parity}


@dataclass(frozen=True)
class RaySet:
    """The ``2(n+m)`` rays at angles ``((n+2m) gamma + k pi) / (n+m)``."""

    n: int
    m: int
    gamma: float
    rays: tuple

    def __iter__(self):
        return iter(self.rays)

    def __len__(self):
        return len(self.rays)

    def __getitem__(self, k):
        return self.rays[k]

    def of_parity(self, parity: str):
        return [r for r in self.rays if r.parity == parity]

    def to_dict(self):
        return {"n": self.n, "m": self.m, "gamma": self.gamma, "rays": [r.to_dict() for r in self.rays]}


def _parity(k):
    return "even" if k % 2 == 0 else "odd"


def ray_set(n: int, m: int, c) -> RaySet:
    if c == 0:
        raise DegenerateCoefficient("ray set needs c != 0")
    gamma = arg(complex(c))
    rays = []
    for k in range(2 * (n + m)):
        angle = (((n + 2 * m) * gamma + k * math.pi) / (n + m)) % TWO_PI
        if angle >= TWO_PI:
            angle = 0.0
        rays.append(Ray(angle, k, _parity(k)))
    return RaySet(n, m, gamma, tuple(rays))


@dataclass(frozen=True)
class RayMatch:
    """Result of :func:`on_ray`.

    ``test_value`` is ``((n+m) beta - (n+2m) gamma) / pi``; ``b`` lies on the
    ray set exactly when it is an integer.
    """

    ray: Optional[Ray]
    test_value: float
    integer_distance: float

    def to_dict(self):
        return {"ray": None if self.ray is None else self.ray.to_dict(),
                "test_value": self.test_value, "integer_distance": self.integer_distance}


def on_ray(b, rays: RaySet, tol: Tolerances = DEFAULT_TOL) -> RayMatch:
    """The ray through ``b`` (within the angular tolerance), if any."""
    if b == 0:
        raise DegenerateCoefficient("on_ray needs b != 0")
    beta = arg(complex(b))
    test = ((rays.n + rays.m) * beta - (rays.n + 2 * rays.m) * rays.gamma) / math.pi
    dist = abs(test - round(test))
    best = min(rays.rays, key=lambda r: circular_distance(beta - r.angle))
    match = best if circular_distance(beta - best.angle) <= tol.angular else None
    return RayMatch(match, test, dist)


# ----------------------------------------------------------------------- U_j

NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class UjClassification:
    """Gap membership ``|z_j| != |z_(j+1)|`` from the roots, and its prediction.

    Keys are 1-based positions ``j = 1 .. k-1``.  A prediction is ``True``,
    ``False`` or ``"not_applicable"``.
    """

    membership: dict
    predicted: dict
    ray: Optional[RayMatch] = None

    def member_set(self):
        return sorted(j for j, v in self.membership.items() if v)

    def agrees(self):
        return all(self.predicted[j] == self.membership[j]
                   for j in self.membership if self.predicted[j] != NOT_APPLICABLE)

    def to_dict(self):
        return {
            "membership": {str(j): v for j, v in self.membership.items()},
            "predicted": {str(j): v for j, v in self.predicted.items()},
            "member_set": self.member_set(),
            "agrees": self.agrees(),
            "ray": None if self.ray is None else self.ray.to_dict(),
        }


def classify_uj(h: HarmonicTrinomial, tol: Tolerances = DEFAULT_TOL, roots=None,
                multiplicity: str = "algebraic") -> UjClassification:
    """Compare the equal-modulus gaps of the root spectrum with the ray rule.

    For ``j != m``: with ``n+j`` even the gap is open iff ``b`` misses the
    even rays, with ``n+j`` odd iff it misses the odd rays.  For ``j = m`` a
    ``b`` on the relevant rays still separates ``z_m`` from ``z_(m+1)`` when
    there is a radius band where the ``b`` term dominates; with no such band
    the gap closes, and a band that degenerates to a single radius is left
    undecided.

    By default (``multiplicity="algebraic"``) a multiple root takes two
    consecutive positions, and a degenerate ``b`` band holding a double root
    closes the gap at ``j = m``.  With ``"set"`` every distinct root takes one
    position and predictions at or past the first multiple root are not
    applicable.
    """
    from .roots import MULTIPLE, find_all_roots

    if h.c == 0:
        raise DegenerateCoefficient("U_j classification needs c != 0")
    if multiplicity not in ("set", "algebraic"):
        raise ValueError(f"multiplicity must be 'set' or 'algebraic', got {multiplicity!r}")
    roots = roots if roots is not None else find_all_roots(h, tol)
    algebraic = multiplicity == "algebraic"
    mods = []
    for r in roots:
        mods.extend([r.modulus] * (2 if algebraic and r.multiplicity_class == MULTIPLE else 1))
    mods = np.array(mods)
    k = len(mods)
    membership = {j: bool(mods[j] - mods[j - 1] > tol.modulus_group) for j in range(1, k)}
    g = h.normalized()
    if g.b == 0:
        return UjClassification(membership, {j: False for j in membership}, None)

    match = on_ray(g.b, ray_set(g.n, g.m, g.c), tol)
    on_parity = match.ray.parity if match.ray is not None else None
    first_multiple = next((i + 1 for i, r in enumerate(roots) if r.multiplicity_class == MULTIPLE), None)
    profile = triangle_profile(g, tol)
    b_kind = profile.b_kind
    root_at_b = b_kind == "double" and any(
        r.multiplicity_class == MULTIPLE and abs(r.modulus - profile.b_radii[0]) <= tol.modulus_group * max(1.0, r.modulus)
        for r in roots)
    if algebraic:
        first_multiple = None
    predicted = {}
    for j in membership:
        if first_multiple is not None and j >= first_multiple:
            predicted[j] = NOT_APPLICABLE
            continue
        rule = on_parity != _parity(g.n + j)
        if j != g.m or rule:
            predicted[j] = rule
        elif b_kind == "pair":
            predicted[j] = True
        elif b_kind == "double":
            predicted[j] = False if (algebraic and root_at_b) else NOT_APPLICABLE
        else:
            predicted[j] = False
    return UjClassification(membership, predicted, match)


# ---------------------------------------------------- singular structure

def cusp_radius(n: int, m: int, c) -> float:
    """The only radius ``v`` with ``v^(n+m) = m|c| / (n+2m)`` at which the b-locus has cusps."""
    return (m * abs(complex(c)) / (n + 2 * m)) ** (1.0 / (n + m))


def cusp_candidates(n: int, m: int, c, v, tol: Tolerances = DEFAULT_TOL):
    """Cusps ``b = ((n+m)/m) v^n e^(i (n+2m) phi)`` of the b-locus at radius ``v``.

    Substituting the cusp value of ``b`` back into the locus equation leaves
    ``((n+2m)/m) v^n e^(i (n+m) phi) = |c| v^(-m) e^(i (gamma + pi))``: an
    angular condition solved by scanning and bisecting over [0, 2pi), and a
    modulus condition that holds only at the cusp radius.  Returns an empty
    list when there is no cusp at ``v``.
    """
    if c == 0:
        raise DegenerateCoefficient("cusps need c != 0")
    v = float(v)
    cm = abs(complex(c))
    gamma = arg(complex(c))
    lhs = (n + 2 * m) / m * v ** (n + m)
    if abs(lhs - cm) > tol.boundary_band * max(cm, lhs):
        return []
    s = n + m

    def phase_gap(phi):
        return math.sin(s * phi - gamma - math.pi)

    # half-step offset so solutions at phi = 0 fall strictly inside a cell
    npts = 64 * s
    grid = (np.arange(npts + 1) - 0.5) * (TWO_PI / npts)
    vals = np.sin(s * grid - gamma - math.pi)
    phis = []
    for i in range(len(grid) - 1):
        lo, hi = grid[i], grid[i + 1]
        if vals[i] == 0:
            phi = lo
        elif vals[i] * vals[i + 1] < 0:
            phi = bisect(phase_gap, lo, hi, xtol=1e-16, rtol=1e-15)
        else:
            continue
        if math.cos(s * phi - gamma - math.pi) > 0:
            phis.append(phi % TWO_PI)
    out = []
    for phi in phis:
        b = (n + m) / m * v ** n * cmath.exp(1j * (n + 2 * m) * phi)
        if all(abs(b - o) > 1e-12 * max(1.0, abs(b)) for o in out):
            out.append(b)
    return out


def double_root_angle(n: int, m: int, c) -> float:
    """``gamma / (n+m)`` reduced to [0, 2pi)."""
    if c == 0:
        raise DegenerateCoefficient("double-root angle needs c != 0")
    return (arg(complex(c)) / (n + m)) % TWO_PI


def double_root_angle_candidates(h: HarmonicTrinomial):
    """All arguments a multiple root can have, by the type of degenerate triangle.

    At a constant-dominant boundary the terms satisfy
    ``a z^(n+m) = -c t`` and ``b conj(z)^m = -c (1-t)`` with t in (0,1), which
    forces ``theta = (gamma - alpha + pi + 2 pi k) / (n+m)``.  At a boundary
    where the ``b`` term balances the other two, ``a z^(n+m)`` is parallel to
    ``c``, giving ``theta = (gamma - alpha + 2 pi k) / (n+m)``.
    """
    s = h.degree
    c_type = sorted(((h.gamma - h.alpha + math.pi + TWO_PI * k) / s) % TWO_PI for k in range(s))
    b_type = sorted(((h.gamma - h.alpha + TWO_PI * k) / s) % TWO_PI for k in range(s))
    return {"c_type": c_type, "b_type": b_type}


@dataclass(frozen=True)
class DoubleRootCheck:
    formula_angle: float
    root_angles: tuple
    agrees: bool
    derived: dict

    def to_dict(self):
        return {"formula_angle": self.formula_angle, "root_angles": list(self.root_angles),
                "agrees": self.agrees, "derived": self.derived}


def check_double_root_angle(h: HarmonicTrinomial, roots, tol: Tolerances = DEFAULT_TOL) -> DoubleRootCheck:
    """Compare the ``gamma/(n+m)`` rule with the arguments of the multiple roots found."""
    from .roots import MULTIPLE

    formula = double_root_angle(h.n, h.m, h.c)
    angles = tuple(r.argument for r in roots if r.multiplicity_class == MULTIPLE)
    agrees = all(circular_distance(t - formula) <= 1e-6 for t in angles)
    return DoubleRootCheck(formula, angles, agrees, double_root_angle_candidates(h))


def singular_disk_radius(n: int, m: int, c_mod: float) -> float:
    """``rho = |c|^(n/(n+m)) ((m/(n+2m))^(n/(n+m)) + (n/(n+2m)) ((n+2m)/m)^(m/(n+m)))``."""
    if not c_mod > 0:
        raise ValueError(f"|c| must be positive, got {c_mod!r}")
    s, d = n + m, n + 2 * m
    return c_mod ** (n / s) * ((m / d) ** (n / s) + (n / d) * (d / m) ** (m / s))


# Previously published approximations of the disk radius for three
# configurations (n, m, |c|); kept so reports can flag disagreements.
REFERENCE_DISK_RADII = {
    (5, 3, 0.5): 0.7676,
    (5, 2, 2.0): 1.9616,
    (4, 1, 1.0): 1.2052,
}


def disk_radius_discrepancies(rtol: float = 1e-3):
    """Reference values that the formula does not reproduce within ``rtol``."""
    out = []
    for (n, m, cm), ref in sorted(REFERENCE_DISK_RADII.items()):
        val = singular_disk_radius(n, m, cm)
        if abs(val - ref) > rtol * ref:
            out.append({"n": n, "m": m, "c_mod": cm, "reference": ref, "formula": val})
    return out


def critical_circle_radius(h: HarmonicTrinomial) -> float:
    """Radius ``(m|b| / ((n+m)|a|))^(1/n)`` on which the Jacobian vanishes."""
    if h.b == 0:
        raise DegenerateCoefficient("critical circle needs b != 0")
    return (h.m * abs(h.b) / (h.degree * abs(h.a))) ** (1.0 / h.n)


def discriminant_analytic(n: int, m: int, b, c) -> complex:
    """Discriminant of the analytic trinomial ``z^(n+m) + b z^m + c``.

    ``(-1)^((n+m)(n+m-1)/2) c^(m-1) (c^n (n+m)^(n+m) - (-1)^(n+m) b^(n+m) n^n m^m)``.
    This is not a discriminant of the harmonic trinomial.
    """
    s = n + m
    b, c = complex(b), complex(c)
    sign = -1 if (s * (s - 1) // 2) % 2 else 1
    return sign * c ** (m - 1) * (c ** n * s ** s - (-1) ** s * b ** s * n ** n * m ** m)


@dataclass
class SingularReport:
    rho: float
    cusps: list = field(default_factory=list)        # (b, v)
    double_points: list = field(default_factory=list)
    critical_circle_radius: Optional[float] = None
    discrepancies: list = field(default_factory=list)

    def to_dict(self):
        return {
            "rho": self.rho,
            "cusps": [{"b": [b.real, b.imag], "v": v} for b, v in self.cusps],
            "double_points": [p.to_dict() for p in self.double_points],
            "critical_circle_radius": self.critical_circle_radius,
            "discrepancies": self.discrepancies,
        }


def singular_report(n: int, m: int, c, vs=(), b=None, samples: int = 2048,
                    tol: Tolerances = DEFAULT_TOL) -> SingularReport:
    """Disk radius, cusps, b-locus double points at each ``v`` and the critical circle."""
    vc = cusp_radius(n, m, c)
    cusps = [(bb, vc) for bb in cusp_candidates(n, m, c, vc, tol)]
    for v in vs:
        cusps.extend((bb, float(v)) for bb in cusp_candidates(n, m, c, v, tol) if abs(float(v) - vc) > 1e-12 * vc)
    doubles = []
    for v in vs:
        doubles.extend(locus_self_intersections(B_LOCUS, n, m, c, v, samples))
    crit = None
    if b is not None and b != 0:
        crit = critical_circle_radius(HarmonicTrinomial(1.0, b, c, n, m))
    cm = abs(complex(c))
    disc = [d for d in disk_radius_discrepancies() if d["n"] == n and d["m"] == m and abs(d["c_mod"] - cm) < 1e-12]
    return SingularReport(singular_disk_radius(n, m, cm), cusps, doubles, crit, disc)


# ----------------------------------------------------------- empirical sweeps

def _sweep_transition(predicate, lo, hi, points=64, steps=40):
    """First |b| in a geometric sweep where ``predicate`` flips, refined by bisection."""
    grid = np.geomspace(lo, hi, points)
    start = predicate(grid[0])
    for x0, x1 in zip(grid[:-1], grid[1:]):
        if predicate(x1) != start:
            a, b = x0, x1
            for _ in range(steps):
                mid = math.sqrt(a * b)
                if predicate(mid) == start:
                    a = mid
                else:
                    b = mid
            return 0.5 * (a + b), bool(start) if isinstance(start, (bool, np.bool_)) else start
    return None, start


def pair_transition_along_ray(n: int, m: int, c, k: Optional[int] = None,
                              tol: Tolerances = DEFAULT_TOL, points=64, steps=40):
    """Sweep ``b`` outward along ray ``k`` and locate where ``|z_m| = |z_(m+1)|`` stops holding.

    ``k`` defaults to the first ray whose parity matches ``n+m``.  Returns the
    transition modulus (or None when the status never changes) and the status
    at the inner end of the sweep.
    """
    from .roots import find_all_roots

    rays = ray_set(n, m, c)
    if k is None:
        k = (n + m) % 2
    direction = cmath.exp(1j * rays[k].angle)

    def equal_pair(lam):
        mods = find_all_roots(HarmonicTrinomial(1.0, lam * direction, c, n, m), tol).moduli
        return len(mods) > m and abs(mods[m] - mods[m - 1]) <= tol.modulus_group

    rho = singular_disk_radius(n, m, abs(complex(c)))
    return _sweep_transition(equal_pair, rho / 8.0, rho * 8.0, points, steps)


def cusp_transition_along_ray(n: int, m: int, c, k: Optional[int] = None,
                              tol: Tolerances = DEFAULT_TOL, points=64, steps=40):
    """Sweep ``b`` outward along a ray of parity ``n`` and locate the first change in root count.

    The cusps of the b-locus sit on these rays, so the count changes where
    the ray leaves the region bounded by the cusped locus.
    """
    from .roots import find_all_roots

    rays = ray_set(n, m, c)
    if k is None:
        k = n % 2

    direction = cmath.exp(1j * rays[k].angle)

    def total(lam):
        return len(find_all_roots(HarmonicTrinomial(1.0, lam * direction, c, n, m), tol))

    rho = singular_disk_radius(n, m, abs(complex(c)))
    return _sweep_transition(total, rho / 8.0, rho * 8.0, points, steps)
