"""Pure-numpy kernels with the same API as the compiled ``_ckernels`` module.

The Aberth update here is the Jacobi (all-roots-at-once) variant so it can be
vectorised; the compiled version uses Gauss-Seidel sweeps.  Both converge to
the same roots.
"""

import numpy as np


def _circle_start(c, offset, stretch):
    d = len(c) - 1
    radius = (1.0 + np.max(np.abs(c[1:] / c[0]))) * stretch
    return radius * np.exp(1j * (2.0 * np.pi * np.arange(d) / d + offset))


def _aberth(c, x, tol, maxiter):
    d = len(c) - 1
    dc = c[:-1] * np.arange(d, 0, -1)
    active = np.ones(d, dtype=bool)
    for it in range(maxiter):
        xa = x[active]
        p = np.polyval(c, xa)
        dp = np.polyval(dc, xa)
        zero_p = p == 0
        dp = np.where(dp == 0, 1e-300, dp)
        ratio = p / dp
        diff = xa[:, None] - x[None, :]
        idx = np.flatnonzero(active)
        diff[np.arange(len(idx)), idx] = 1.0
        diff[diff == 0] = 1e-300
        s = (1.0 / diff).sum(axis=1) - 1.0
        w = ratio / (1.0 - ratio * s)
        w[zero_p] = 0.0
        x[active] = xa - w
        done = np.abs(w) <= tol * np.maximum(1.0, np.abs(x[active]))
        active[idx[done]] = False
        if not active.any():
            return it + 1
    return -1


def aberth(coeffs, init=None, tol=1e-14, maxiter=500, offset=0.4, stretch=1.0):
    """Simultaneous Aberth iteration for one polynomial (highest degree first)."""
    c = np.asarray(coeffs, dtype=np.complex128)
    d = len(c) - 1
    if d <= 0:
        return np.empty(0, dtype=np.complex128), 0
    x = _circle_start(c, offset, stretch) if init is None else np.array(init, dtype=np.complex128)
    it = _aberth(c, x, tol, maxiter)
    return x, it


def aberth_batch(coeff_rows, tol=1e-14, maxiter=500, warm=False):
    """Solve every row of a (B, d+1) coefficient array; see the compiled twin."""
    c = np.asarray(coeff_rows, dtype=np.complex128)
    nrows, d = c.shape[0], c.shape[1] - 1
    roots = np.empty((nrows, max(d, 0)), dtype=np.complex128)
    iters = np.empty(nrows, dtype=np.int64)
    for row in range(nrows):
        if warm and row > 0 and iters[row - 1] >= 0:
            x = roots[row - 1].copy()
            it = _aberth(c[row], x, tol, maxiter // 4 + 8)
            if it < 0:
                x, it = aberth(c[row], tol=tol, maxiter=maxiter)
        else:
            x, it = aberth(c[row], tol=tol, maxiter=maxiter)
        roots[row] = x
        iters[row] = it
    return roots, iters


def segment_intersections(xs, ys, closed=True, snap=1e-9):
    """Proper crossings between non-adjacent segments of a polyline.

    Returns arrays ``(i, j, s, t)`` with segment i hit at parameter s and
    segment j at parameter t, i < j.
    """
    x = np.asarray(xs, dtype=np.float64)
    y = np.asarray(ys, dtype=np.float64)
    npts = len(x)
    nseg = npts if closed else npts - 1
    seg = np.arange(nseg)
    nxt = (seg + 1) % npts
    ax, ay = x[seg], y[seg]
    bx, by = x[nxt] - ax, y[nxt] - ay
    out = [[], [], [], []]
    for i in range(nseg):
        j = np.arange(i + 2, nseg)
        if closed and i == 0:
            j = j[j != nseg - 1]
        if len(j) == 0:
            continue
        den = bx[i] * by[j] - by[i] * bx[j]
        ex, ey = ax[j] - ax[i], ay[j] - ay[i]
        with np.errstate(divide="ignore", invalid="ignore"):
            s = (ex * by[j] - ey * bx[j]) / den
            t = (ex * by[i] - ey * bx[i]) / den
        ok = (np.abs(den) >= 1e-300) & (s >= -snap) & (s <= 1 + snap) & (t >= -snap) & (t <= 1 + snap)
        out[0].append(np.full(ok.sum(), i))
        out[1].append(j[ok])
        out[2].append(s[ok])
        out[3].append(t[ok])
    if not out[0]:
        return tuple(np.empty(0, dtype=dt) for dt in (np.int64, np.int64, np.float64, np.float64))
    return (np.concatenate(out[0]).astype(np.int64), np.concatenate(out[1]).astype(np.int64),
            np.concatenate(out[2]), np.concatenate(out[3]))
