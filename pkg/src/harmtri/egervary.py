"""Egervary equivalence of harmonic trinomials and normalising transforms.

Two trinomials are equivalent when one is obtained from the other by
multiplying by a nonzero constant and rotating the variable, optionally after
conjugating every coefficient.  For a common exponent pair this reduces to
equal modulus ratios plus one angular congruence per branch.
"""

import cmath
import math
from dataclasses import dataclass

from .core import DEFAULT_TOL, HarmonicTrinomial, Tolerances, circular_distance
from .errors import DegenerateCoefficient, ExponentMismatch

RATIO_RTOL = 1e-9


@dataclass(frozen=True)
class EquivalenceWitness:
    """Outcome of :func:`is_equivalent`.

    ``branch`` is ``"direct"`` (same orientation), ``"conjugate"`` (after
    conjugating coefficients) or ``"none"``.  ``congruence_defect`` is the
    circular distance, in radians, of the angular combination from 0 mod 2pi
    on the reported branch.
    """

    equivalent: bool
    branch: str
    ratio: float
    congruence_defect: float
    ratio_consistent: bool = True
    direct_defect: float = math.nan
    conjugate_defect: float = math.nan

    def to_dict(self):
        return {
            "equivalent": self.equivalent,
            "branch": self.branch,
            "ratio": self.ratio,
            "ratio_consistent": self.ratio_consistent,
            "congruence_defect": self.congruence_defect,
            "direct_defect": self.direct_defect,
            "conjugate_defect": self.conjugate_defect,
        }


def _congruence(h1, h2, sign):
    """``m(a1 -+ a2) + (n+m)(b1 -+ b2) - (n+2m)(g1 -+ g2)`` with sign -1 (direct) or +1."""
    n, m = h1.n, h1.m
    return (m * (h1.alpha + sign * h2.alpha)
            + (n + m) * (h1.beta + sign * h2.beta)
            - (n + 2 * m) * (h1.gamma + sign * h2.gamma))


def is_equivalent(h1: HarmonicTrinomial, h2: HarmonicTrinomial,
                  tol: Tolerances = DEFAULT_TOL) -> EquivalenceWitness:
    """Test whether ``h1`` and ``h2`` are Egervary equivalent.

    Raises
    ------
    ExponentMismatch
        If the exponent pairs differ.
    DegenerateCoefficient
        If any of the six coefficients is zero.
    """
    if (h1.n, h1.m) != (h2.n, h2.m):
        raise ExponentMismatch(f"exponents differ: ({h1.n}, {h1.m}) vs ({h2.n}, {h2.m})")
    for h in (h1, h2):
        if h.b == 0 or h.c == 0:
            raise DegenerateCoefficient("equivalence test needs all coefficients nonzero")
    ratios = [abs(h1.a) / abs(h2.a), abs(h1.b) / abs(h2.b), abs(h1.c) / abs(h2.c)]
    ratio = ratios[0]
    ratio_ok = all(abs(r - ratio) <= RATIO_RTOL * ratio for r in ratios[1:])
    direct = circular_distance(_congruence(h1, h2, -1.0))
    conj = circular_distance(_congruence(h1, h2, +1.0))
    if direct <= conj:
        branch, defect = "direct", direct
    else:
        branch, defect = "conjugate", conj
    equivalent = ratio_ok and defect <= tol.angular
    if not equivalent:
        branch = "none"
    return EquivalenceWitness(equivalent, branch, ratio, defect, ratio_ok, direct, conj)


def transform(h: HarmonicTrinomial, k: complex, delta: float, conjugate: bool = False) -> HarmonicTrinomial:
    """Return ``k * h(e^(i delta) z)``, with coefficients conjugated first if asked.

    This is the defining family of equivalent trinomials, independent of the
    congruence test in :func:`is_equivalent`.
    """
    a, b, c = h.a, h.b, h.c
    if conjugate:
        a, b, c = a.conjugate(), b.conjugate(), c.conjugate()
    rot = cmath.exp(1j * delta)
    return HarmonicTrinomial(k * a * rot ** h.degree, k * b * rot.conjugate() ** h.m, k * c, h.n, h.m)


def rescale_to_unit_c(h: HarmonicTrinomial):
    """Normalise to ``zeta^(n+m) + b' conj(zeta)^m + c/|c|`` with ``z = scale * zeta``.

    Returns
    -------
    (HarmonicTrinomial, float)
        The rescaled trinomial and ``scale = |c|^(1/(n+m))`` (after dividing
        by ``a``).  Root moduli of ``h`` are ``scale`` times those of the result.
    """
    if h.c == 0:
        raise DegenerateCoefficient("rescaling needs c != 0")
    g = h.normalized()
    cm = abs(g.c)
    scale = cm ** (1.0 / g.degree)
    return HarmonicTrinomial(1.0, g.b / cm ** (g.n / g.degree), g.c / cm, g.n, g.m), scale


def negate_variable(h: HarmonicTrinomial) -> HarmonicTrinomial:
    """Return ``g(z) = h(-z)``: coefficients ``((-1)^(n+m) a, (-1)^m b, c)``."""
    return HarmonicTrinomial((-1) ** h.degree * h.a, (-1) ** h.m * h.b, h.c, h.n, h.m)
