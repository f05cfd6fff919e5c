"""Backend dispatch for the numerical inner loops.

The compiled Cython module is used when it imported cleanly; otherwise the
numpy implementation takes over.  ``use_backend`` switches explicitly (tests
and the benchmark compare both).
"""

from contextlib import contextmanager

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

_BACKENDS = {"python": _pykernels}
if _ckernels is not None:
    _BACKENDS["cython"] = _ckernels

BACKEND = "cython" if _ckernels is not None else "python"
_active = _BACKENDS[BACKEND]


def available_backends():
    return sorted(_BACKENDS)


def active_backend():
    return "cython" if _active is _ckernels and _ckernels is not None else "python"


@contextmanager
def use_backend(name):
    """Temporarily route kernel calls to backend ``name`` ("cython" or "python")."""
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} unavailable; have {available_backends()}")
    previous = _active
    _active = _BACKENDS[name]
    try:
        yield
    finally:
        _active = previous


def aberth(coeffs, init=None, tol=1e-14, maxiter=500, offset=0.4, stretch=1.0):
    return _active.aberth(coeffs, init, tol, maxiter, offset, stretch)


def aberth_batch(coeff_rows, tol=1e-14, maxiter=500, warm=False):
    return _active.aberth_batch(coeff_rows, tol, maxiter, warm)


def segment_intersections(xs, ys, closed=True, snap=1e-9):
    return _active.segment_intersections(xs, ys, closed, snap)
