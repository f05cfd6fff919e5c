"""Assemble every analysis of one trinomial into a byte-stable JSON document."""

import enum
import json
import math
import numbers
from fractions import Fraction

import numpy as np

from . import __version__, kernels
from .bohl import bohl_analysis, nearest_admissible
from .core import DEFAULT_TOL, HarmonicTrinomial, Tolerances, triangle_profile
from .egervary import is_equivalent
from .errors import HarmonicError, OnBoundary
from .geometry import (
    check_double_root_angle,
    classify_uj,
    critical_circle_radius,
    on_ray,
    ray_set,
    singular_report,
)
from .roots import find_all_roots, moduli_spectrum

REPORT_KEYS = ("input", "triangle_profile", "counts", "roots", "spectrum", "uj", "rays",
               "singular", "equivalence", "meta")


def to_jsonable(obj):
    """Recursively convert to JSON-safe values: complex -> [re, im], non-finite -> None."""
    if obj is None or isinstance(obj, (bool, str)):
        return obj
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, enum.Enum):
        return obj.value
    if isinstance(obj, Fraction):
        return float(obj)
    if isinstance(obj, numbers.Integral):
        return int(obj)
    if isinstance(obj, numbers.Real):
        x = float(obj)
        return x if math.isfinite(x) else None
    if isinstance(obj, numbers.Complex):
        z = complex(obj)
        return [to_jsonable(z.real), to_jsonable(z.imag)]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(x) for x in obj.tolist()]
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(x) for x in obj]
    if hasattr(obj, "to_dict"):
        return to_jsonable(obj.to_dict())
    raise TypeError(f"cannot serialise {type(obj).__name__}")


def dumps(doc) -> str:
    return json.dumps(to_jsonable(doc), sort_keys=True, indent=2, allow_nan=False) + "\n"


def input_echo(h, vs=(), samples=2048, tol=DEFAULT_TOL, compare=None):
    """Everything needed to rebuild the report from the report itself."""
    echo = h.to_dict()
    echo["v"] = [float(v) for v in vs]
    echo["samples"] = int(samples)
    echo["tolerances"] = tol.to_dict()
    if compare is not None:
        echo["compare"] = compare.to_dict()
    return echo


def _section(errors, name, fn):
    try:
        return fn()
    except HarmonicError as exc:
        errors.append({"section": name, "error": type(exc).__name__, "message": str(exc)})
        return None


def count_entries(h, vs, tol):
    """Per-radius Bohl counts; a bad radius yields an error entry, not an exception."""
    out = []
    for v in vs:
        try:
            out.append(bohl_analysis(h, v, tol).to_dict())
        except OnBoundary as exc:
            lo, hi = nearest_admissible(h, v, tol)
            out.append({"v": float(v), "error": "OnBoundary", "reason": exc.reason, "message": str(exc),
                        "nearest_admissible": [lo, hi]})
        except HarmonicError as exc:
            out.append({"v": float(v), "error": type(exc).__name__, "message": str(exc)})
    return out


def build_report(h: HarmonicTrinomial, vs=(), tol: Tolerances = DEFAULT_TOL, samples: int = 2048,
                 compare: HarmonicTrinomial = None):
    """Run every applicable analysis.  Returns ``(report_dict, errors)``."""
    errors = []
    report = {key: None for key in REPORT_KEYS}
    report["input"] = input_echo(h, vs, samples, tol, compare)
    if h.b != 0 and h.c != 0:
        report["triangle_profile"] = _section(errors, "triangle_profile",
                                              lambda: triangle_profile(h, tol).to_dict())
    counts = count_entries(h, vs, tol)
    errors.extend({"section": "counts", "error": c["error"], "message": c["message"]} for c in counts if "error" in c)
    report["counts"] = counts

    roots = _section(errors, "roots", lambda: find_all_roots(h, tol, samples))
    if roots is not None:
        report["roots"] = roots.to_dict()
        report["spectrum"] = [{"modulus": mod, "count": cnt} for mod, cnt in moduli_spectrum(h, tol, roots)]
        if h.c != 0:
            report["uj"] = _section(errors, "uj", lambda: {
                "algebraic": classify_uj(h, tol, roots).to_dict(),
                "set": classify_uj(h, tol, roots, multiplicity="set").to_dict(),
            })

    g = h.normalized()
    if g.c != 0:
        def rays():
            rs = ray_set(g.n, g.m, g.c)
            return {"set": rs.to_dict(), "b_match": None if g.b == 0 else on_ray(g.b, rs, tol).to_dict()}

        report["rays"] = _section(errors, "rays", rays)

        def singular():
            rep = singular_report(g.n, g.m, g.c, vs, g.b if g.b != 0 else None, tol=tol).to_dict()
            rep["normalized"] = True
            if g.b != 0:
                rep["critical_circle_radius"] = critical_circle_radius(h)
            if roots is not None:
                rep["double_root_angle"] = check_double_root_angle(h, roots, tol).to_dict()
            return rep

        report["singular"] = _section(errors, "singular", singular)

    if compare is not None:
        report["equivalence"] = _section(errors, "equivalence", lambda: is_equivalent(h, compare, tol).to_dict())

    report["meta"] = {
        "tool": "harmtri",
        "version": __version__,
        "backend": kernels.active_backend(),
        "tolerances": tol.to_dict(),
        "errors": errors,
        "extension": bool(roots is not None and roots.diagnostics.get("extension", False)),
    }
    return report, errors
