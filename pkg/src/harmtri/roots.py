"""Independent numerical root finder for harmonic trinomials.

On the circle ``|z| = v`` we have ``conj(z)^m = v^(2m) / z^m``, so multiplying
``h`` by ``z^m`` gives the ordinary polynomial

    p_v(w) = a w^(n+2m) + c w^m + b v^(2m)

and every root of ``h`` of modulus ``v`` is a root of ``p_v`` of modulus ``v``.
Scanning ``v`` and watching the sorted root moduli of ``p_v`` cross the line
``|w| = v`` turns the 2-D search into 1-D bracketing over the radii where
roots can exist.  Candidates are polished with Newton's method on ``h``
itself and accepted on their residual alone.
"""

import cmath
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize_scalar

from . import kernels
from .core import DEFAULT_TOL, HarmonicTrinomial, Tolerances, arg, triangle_profile
from .errors import NoConvergence, OnBoundary, OracleIncomplete, SingularJacobian

DEFAULT_SAMPLES = 2048
MAX_DOUBLINGS = 4
SCAN_MARGIN = 1e-3
COND_LIMIT = 1e12
NEWTON_MAXITER = 100

SENSE_PRESERVING = "sense_preserving"
SENSE_REVERSING = "sense_reversing"
SINGULAR = "singular"
SIMPLE = "simple"
MULTIPLE = "multiple"


# ---------------------------------------------------------------- polynomials

def companion_polynomial(h: HarmonicTrinomial, v: float) -> np.ndarray:
    """Coefficients (highest degree first) of ``a w^(n+2m) + c w^m + b v^(2m)``."""
    d = h.n + 2 * h.m
    coeffs = np.zeros(d + 1, dtype=np.complex128)
    coeffs[0] = h.a
    coeffs[d - h.m] += h.c
    coeffs[d] += h.b * v ** (2 * h.m)
    return coeffs


def _residual_ok(coeffs, x, rtol=1e-12):
    ax = np.abs(x)
    scale = np.polyval(np.abs(coeffs), ax)
    return np.abs(np.polyval(coeffs, x)) <= rtol * np.maximum(scale, np.finfo(float).tiny)


def poly_roots(coeffs, tol: float = 1e-14, maxiter: int = 500) -> np.ndarray:
    """All roots of a polynomial given highest-degree-first coefficients.

    Simultaneous Aberth iteration started on a circle of radius
    ``1 + max|c_i / c_0|``.  Zero trailing coefficients are split off as exact
    zero roots.  One retry from a rotated, enlarged start circle is made before
    giving up.

    Raises
    ------
    ValueError
        If the leading coefficient is zero.
    NoConvergence
        If some root still has a relative residual above 1e-12.
    """
    c = np.asarray(coeffs, dtype=np.complex128)
    if c.ndim != 1 or len(c) == 0 or c[0] == 0:
        raise ValueError("leading coefficient must be nonzero")
    nz = len(c) - 1 - int(np.max(np.flatnonzero(c)))
    core = c[: len(c) - nz]
    zeros = np.zeros(nz, dtype=np.complex128)
    if len(core) == 1:
        return zeros
    for offset, stretch in ((0.4, 1.0), (1.3, 1.1)):
        x, _ = kernels.aberth(core, None, tol, maxiter, offset, stretch)
        if np.all(_residual_ok(core, x)):
            return np.concatenate([x, zeros])
    raise NoConvergence(f"Aberth iteration did not converge for degree {len(core) - 1}")


# ------------------------------------------------------------------- records

@dataclass(frozen=True)
class RootRecord:
    """One root with its classification.

    ``orientation`` is the sign of the Jacobian ``|h_z|^2 - |h_zbar|^2``
    (``singular`` when it vanishes numerically), and a singular root is
    reported as ``multiple``.
    """

    value: complex
    modulus: float
    orientation: str
    multiplicity_class: str
    residual: float
    jacobian: float

    @property
    def argument(self) -> float:
        return arg(self.value)

    def to_dict(self):
        return {
            "value": [self.value.real, self.value.imag],
            "modulus": self.modulus,
            "argument": self.argument,
            "orientation": self.orientation,
            "multiplicity_class": self.multiplicity_class,
            "residual": self.residual,
            "jacobian": self.jacobian,
        }


@dataclass(frozen=True)
class RootList:
    """Roots sorted by modulus (ties by argument) plus equal-modulus groups."""

    roots: tuple
    groups: tuple
    method: str = "scan"
    diagnostics: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    def __getitem__(self, i):
        return self.roots[i]

    @property
    def values(self) -> np.ndarray:
        return np.array([r.value for r in self.roots], dtype=np.complex128)

    @property
    def moduli(self) -> np.ndarray:
        return np.array([r.modulus for r in self.roots], dtype=float)

    def count_below(self, v: float) -> int:
        return int(np.sum(self.moduli < v))

    def to_dict(self):
        return {
            "method": self.method,
            "roots": [r.to_dict() for r in self.roots],
            "groups": [list(g) for g in self.groups],
            "diagnostics": self.diagnostics,
        }


# ------------------------------------------------------------------- Newton

def _derivatives(h, z):
    f = h.a * h.degree * z ** (h.degree - 1)
    g = h.b * h.m * np.conj(z) ** (h.m - 1)
    return f, g


def jacobian(h: HarmonicTrinomial, z) -> float:
    """Real Jacobian ``|a (n+m) z^(n+m-1)|^2 - |b m z^(m-1)|^2`` of ``h`` at ``z``."""
    f, g = _derivatives(h, complex(z))
    return float(abs(f) ** 2 - abs(g) ** 2)


def _scale(h, z):
    return float(h.scale(abs(z)))


def newton_polish(h: HarmonicTrinomial, z0, tol: Tolerances = DEFAULT_TOL,
                  maxiter: int = NEWTON_MAXITER) -> complex:
    """Newton's method on the real 2x2 system ``(Re h, Im h) = 0``.

    The update solves ``h + f dz + g conj(dz) = 0`` with ``f = dh/dz`` and
    ``g = dh/dzbar``, i.e. ``dz = (g conj(h) - f_bar h) / (|f|^2 - |g|^2)``.

    Raises
    ------
    SingularJacobian
        The Jacobian condition number ``(|f|+|g|) / ||f|-|g||`` reaches 1e12.
    NoConvergence
        Neither stopping rule fired within ``maxiter`` steps.
    """
    z = complex(z0)
    for _ in range(maxiter):
        hz = h(z)
        if abs(hz) <= tol.residual * _scale(h, z):
            return z
        f, g = _derivatives(h, z)
        af, ag = abs(f), abs(g)
        gap = abs(af - ag)
        if gap == 0 or (af + ag) / gap >= COND_LIMIT:
            raise SingularJacobian(f"Jacobian is singular near z={z!r}")
        dz = (g * hz.conjugate() - f.conjugate() * hz) / (af * af - ag * ag)
        z += dz
        if abs(dz) < 1e-15 * max(1.0, abs(z)):
            return z
    raise NoConvergence(f"Newton did not converge from z0={complex(z0)!r}")


def _descend(h, z, steps=60):
    """Damped steepest descent on ``|h|^2`` (used where the Jacobian is singular)."""
    for _ in range(steps):
        hz = h(z)
        e0 = abs(hz)
        if e0 == 0:
            return z
        f, g = _derivatives(h, z)
        grad = g * hz.conjugate() + hz * f.conjugate()
        gn = abs(grad)
        if gn == 0:
            return z
        t = e0 * e0 / (gn * gn)
        while t > 1e-30:
            trial = z - t * grad
            if abs(h(trial)) < e0:
                z = trial
                break
            t *= 0.5
        else:
            return z
    return z


def _refine(h, z, maxiter=30):
    """Newton steps past the acceptance threshold, kept only while |h| decreases.

    Two copies of one simple root left at the residual threshold can sit
    farther apart than the dedup radius; driving both to working precision
    merges them.
    """
    hz = h(z)
    for _ in range(maxiter):
        if hz == 0:
            break
        f, g = _derivatives(h, z)
        det = abs(f) ** 2 - abs(g) ** 2
        if det == 0:
            break
        dz = (g * hz.conjugate() - f.conjugate() * hz) / det
        trial = z + dz
        ht = h(trial)
        if abs(ht) >= abs(hz):
            break
        z, hz = trial, ht
        if abs(dz) < 1e-16 * max(1.0, abs(z)):
            break
    return z


def _polish(h, z, tol):
    """Newton with a gradient-descent fallback, then full refinement; never raises."""
    for _ in range(3):
        try:
            z = newton_polish(h, z, tol)
            break
        except (SingularJacobian, NoConvergence):
            z = _descend(h, z)
    return _refine(h, z)


def _snap_to_critical_circle(h, z, r_c, tol):
    """Move ``z`` onto ``|z| = r_c`` if that keeps it a root.

    Every multiple root lies on the critical circle, where Newton only
    converges linearly; optimising the angle on the circle pins it down.
    """
    if r_c is None or abs(abs(z) - r_c) > 1e-6 * r_c:
        return None
    t0 = cmath.phase(z)
    res = minimize_scalar(lambda t: abs(h(r_c * cmath.exp(1j * t))), bounds=(t0 - 1e-4, t0 + 1e-4),
                          method="bounded", options={"xatol": 1e-15})
    zs = r_c * cmath.exp(1j * float(res.x))
    if abs(h(zs)) <= tol.residual * _scale(h, zs):
        return zs
    return None


def _classify(h, z, tol):
    z = complex(z)
    mod = abs(z)
    sc = _scale(h, z)
    jac = jacobian(h, z)
    if abs(jac) <= tol.residual * sc * sc:
        orient, mult = SINGULAR, MULTIPLE
    elif jac > 0:
        orient, mult = SENSE_PRESERVING, SIMPLE
    else:
        orient, mult = SENSE_REVERSING, SIMPLE
    return RootRecord(z, mod, orient, mult, abs(h(z)) / sc, jac)


def _group(moduli, gap):
    groups = []
    for i, r in enumerate(moduli):
        if groups and r - moduli[groups[-1][-1]] <= gap:
            groups[-1].append(i)
        else:
            groups.append([i])
    return tuple(tuple(g) for g in groups)


def _build_list(h, zs, tol, method, diagnostics):
    recs = [_classify(h, z, tol) for z in zs]
    recs.sort(key=lambda r: r.modulus)
    groups = _group([r.modulus for r in recs], tol.modulus_group)
    ordered = []
    for g in groups:
        ordered.extend(sorted((recs[i] for i in g), key=lambda r: r.argument))
    if len(ordered) > h.max_roots:
        raise OracleIncomplete(f"accepted {len(ordered)} roots, more than n + 3m = {h.max_roots}")
    return RootList(tuple(ordered), groups, method, diagnostics)


# ------------------------------------------------------------- closed forms

def _closed_form(h, tol):
    n, m = h.n, h.m
    if h.b == 0 and h.c == 0:
        return _build_list(h, [0j], tol, "closed_form_zero", {"extension": True})
    if h.b == 0:
        rho = (abs(h.c) / abs(h.a)) ** (1.0 / h.degree)
        base = h.gamma + math.pi - h.alpha
        zs = [rho * cmath.exp(1j * (base + 2 * math.pi * k) / h.degree) for k in range(h.degree)]
        zs = [_polish(h, z, tol) for z in zs]
        return _build_list(h, zs, tol, "closed_form_b0", {})
    # c == 0: z = 0, plus |a| r^n = |b| with (n+2m) theta = beta + pi - alpha (mod 2pi)
    rho = (abs(h.b) / abs(h.a)) ** (1.0 / n)
    base = h.beta + math.pi - h.alpha
    d = n + 2 * m
    zs = [0j] + [_polish(h, rho * cmath.exp(1j * (base + 2 * math.pi * k) / d), tol) for k in range(d)]
    return _build_list(h, zs, tol, "closed_form_c0", {"extension": True})


# -------------------------------------------------------------------- scan

def _sorted_moduli(h, vs, warm):
    rows = np.tile(companion_polynomial(h, 1.0), (len(vs), 1))
    rows[:, -1] = h.b * np.asarray(vs) ** (2 * h.m)
    roots, _ = kernels.aberth_batch(rows, warm=warm)
    return np.sort(np.abs(roots), axis=1)


def _near_circle(h, v, window):
    try:
        w = poly_roots(companion_polynomial(h, v))
    except NoConvergence:
        return []
    return [complex(x) for x in w if abs(abs(x) - v) <= window * max(1.0, v)]


def _bisect_brackets(h, brackets):
    """Refine every (j, lo, hi) bracket of ``|w_(j)(v)| - v`` at once."""
    if not brackets:
        return []
    js = np.array([b[0] for b in brackets])
    lo = np.array([b[1] for b in brackets], dtype=float)
    hi = np.array([b[2] for b in brackets], dtype=float)
    glo = np.array([b[3] for b in brackets], dtype=float)
    rows_idx = np.arange(len(js))
    for _ in range(200):
        wide = (hi - lo) > 1e-13 * np.maximum(1.0, hi)
        if not wide.any():
            break
        mid = 0.5 * (lo + hi)
        gm = _sorted_moduli(h, mid, warm=False)[rows_idx, js] - mid
        left = np.sign(gm) == np.sign(glo)
        upd = wide & left
        lo = np.where(upd, mid, lo)
        glo = np.where(upd, gm, glo)
        hi = np.where(wide & ~left, mid, hi)
    return list(zip(0.5 * (lo + hi), hi - lo))


def _tangency_points(h, vs, g):
    """Local minima of ``|g_j|`` that do not straddle a sign change."""
    out = []
    absg = np.abs(g)
    for j in range(g.shape[1]):
        col = absg[:, j]
        interior = np.flatnonzero((col[1:-1] <= col[:-2]) & (col[1:-1] <= col[2:])) + 1
        for i in interior:
            if col[i] > 0.05 * vs[i]:
                continue
            if np.sign(g[i - 1, j]) != np.sign(g[i, j]) or np.sign(g[i, j]) != np.sign(g[i + 1, j]):
                continue

            def objective(v, j=j):
                return abs(_sorted_moduli(h, np.array([v]), warm=False)[0, j] - v)

            res = minimize_scalar(objective, bounds=(vs[i - 1], vs[i + 1]), method="bounded",
                                  options={"xatol": 1e-13 * max(1.0, vs[i])})
            out.append(float(res.x))
    return out


def _scan(h, tol, samples, profile):
    lo_v = profile.c_radius * (1.0 - SCAN_MARGIN)
    hi_v = profile.a_radius * (1.0 + SCAN_MARGIN)
    vs = np.geomspace(lo_v, hi_v, samples)
    g = _sorted_moduli(h, vs, warm=True) - vs[:, None]
    sg = np.sign(g)
    brackets = []
    for j in range(g.shape[1]):
        for i in np.flatnonzero(sg[:-1, j] * sg[1:, j] < 0):
            brackets.append((j, vs[i], vs[i + 1], g[i, j]))
        for i in np.flatnonzero(sg[:, j] == 0):
            brackets.append((j, vs[i], vs[i], 0.0))
    refined = _bisect_brackets(h, brackets)
    width = max([w for _, w in refined], default=1e-13)

    r_c = profile.b_peak
    probes = [v for v, _ in refined]
    window = 1e-7
    candidates = []
    for v in probes:
        candidates.extend(_near_circle(h, v, window))
    extra = _tangency_points(h, vs, g) + [r_c, profile.c_radius, profile.a_radius, *profile.b_radii]
    for v in extra:
        candidates.extend(_near_circle(h, v, 1e-4))

    accepted = []
    for z in candidates:
        zp = _polish(h, z, tol)
        snapped = _snap_to_critical_circle(h, zp, r_c, tol)
        if snapped is not None:
            zp = snapped
        if not (math.isfinite(zp.real) and math.isfinite(zp.imag)):
            continue
        res = abs(h(zp)) / _scale(h, zp)
        if res <= tol.residual:
            accepted.append((zp, res, snapped is not None))

    radius = max(tol.modulus_group, 10.0 * width)
    # prefer roots pinned to the critical circle, then the smallest residual
    accepted.sort(key=lambda t: (not t[2], t[1]))
    kept = []
    for z, _, _ in accepted:
        if all(abs(z - k) > radius for k in kept):
            kept.append(z)
    return kept, width


def _expected_total(h, profile, tol):
    from .bohl import count_roots_below  # local import: bohl is only a cross-check here

    try:
        return count_roots_below(h, profile.a_radius * (1.0 + SCAN_MARGIN), tol)
    except OnBoundary:
        return None


def find_all_roots(h: HarmonicTrinomial, tol: Tolerances = DEFAULT_TOL,
                   samples: int = DEFAULT_SAMPLES) -> RootList:
    """Every root of ``h``, classified and sorted by modulus.

    ``b = 0`` and ``c = 0`` are solved in closed form (``c = 0`` is outside the
    usual hypotheses and is marked as an extension in ``diagnostics``).

    Raises
    ------
    OracleIncomplete
        More than ``n + 3m`` distinct roots were accepted.
    """
    if h.b == 0 or h.c == 0:
        return _closed_form(h, tol)
    profile = triangle_profile(h, tol)
    expected = _expected_total(h, profile, tol)
    n_samples = samples
    for attempt in range(MAX_DOUBLINGS + 1):
        zs, width = _scan(h, tol, n_samples, profile)
        roots = _build_list(h, zs, tol, "scan", {})
        singular = any(r.orientation == SINGULAR for r in roots)
        index_sum = sum(1 if r.orientation == SENSE_PRESERVING else -1 for r in roots)
        consistent = (expected is None or len(roots) == expected) and (singular or index_sum == h.degree)
        if consistent or attempt == MAX_DOUBLINGS:
            break
        n_samples *= 2
    diagnostics = {
        "samples": n_samples,
        "bisection_width": width,
        "expected_total": expected,
        "index_sum": None if singular else index_sum,
        "consistent": bool(consistent),
    }
    return RootList(roots.roots, roots.groups, "scan", diagnostics)


def moduli_spectrum(h: HarmonicTrinomial, tol: Tolerances = DEFAULT_TOL, roots: RootList = None):
    """Equal-modulus groups as ``[(modulus, count), ...]`` in ascending order."""
    roots = roots if roots is not None else find_all_roots(h, tol)
    mods = roots.moduli
    return [(float(np.mean(mods[list(g)])), len(g)) for g in roots.groups]
