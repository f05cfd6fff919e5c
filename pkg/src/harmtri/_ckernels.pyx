# cython: language_level=3
"""Compiled inner loops: Aberth iteration and polyline segment intersection.

Mirrors the API of ``harmtri._pykernels`` exactly.
"""

import numpy as np

from libc.math cimport cos, sin, hypot, fabs, M_PI
from libc.stdlib cimport malloc, free


cdef inline double _cabs(double complex z) noexcept nogil:
    return hypot(z.real, z.imag)


cdef int _aberth(const double complex[:] c, double complex[:] x, double tol,
                 int maxiter, bint init, double offset, double stretch) noexcept nogil:
    """Return the iteration count, -1 if the budget ran out, -2 on allocation failure."""
    cdef Py_ssize_t d = c.shape[0] - 1
    cdef Py_ssize_t i, j, k
    cdef double complex lead = c[0], xi, p, dp, s, ratio, w, diff
    cdef double radius, r, ax
    cdef int it
    cdef bint all_done
    cdef char *done

    if d <= 0:
        return 0
    if init:
        radius = 0.0
        for i in range(1, d + 1):
            r = _cabs(c[i] / lead)
            if r > radius:
                radius = r
        radius = (1.0 + radius) * stretch
        for i in range(d):
            x[i] = radius * (cos(2.0 * M_PI * i / d + offset) + 1j * sin(2.0 * M_PI * i / d + offset))

    done = <char *> malloc(d * sizeof(char))
    if done == NULL:
        return -2
    for i in range(d):
        done[i] = 0

    for it in range(maxiter):
        all_done = True
        for i in range(d):
            if done[i]:
                continue
            xi = x[i]
            p = c[0]
            dp = 0.0
            for k in range(1, d + 1):
                dp = dp * xi + p
                p = p * xi + c[k]
            if p == 0.0:
                done[i] = 1
                continue
            if dp == 0.0:
                # step off a critical point of p
                x[i] = xi * (1.0 + 1e-8) + 1e-12
                all_done = False
                continue
            ratio = p / dp
            s = 0.0
            for j in range(d):
                if j != i:
                    diff = xi - x[j]
                    if diff == 0.0:
                        diff = 1e-300
                    s = s + 1.0 / diff
            w = ratio / (1.0 - ratio * s)
            x[i] = xi - w
            ax = _cabs(x[i])
            if ax < 1.0:
                ax = 1.0
            if _cabs(w) <= tol * ax:
                done[i] = 1
            else:
                all_done = False
        if all_done:
            free(done)
            return it + 1
    free(done)
    return -1


def aberth(coeffs, init=None, double tol=1e-14, int maxiter=500,
           double offset=0.4, double stretch=1.0):
    """Simultaneous Aberth iteration for one polynomial (highest degree first)."""
    cdef double complex[:] c = np.ascontiguousarray(coeffs, dtype=np.complex128)
    cdef Py_ssize_t d = c.shape[0] - 1
    out = np.empty(max(d, 0), dtype=np.complex128)
    cdef double complex[:] x = out
    cdef bint do_init = init is None
    if not do_init:
        out[:] = np.asarray(init, dtype=np.complex128)
    cdef int it
    with nogil:
        it = _aberth(c, x, tol, maxiter, do_init, offset, stretch)
    return out, it


def aberth_batch(coeff_rows, double tol=1e-14, int maxiter=500, bint warm=False):
    """Solve every row of a (B, d+1) coefficient array.

    With ``warm`` each row starts from the previous row's roots; rows that fail
    from the warm start are retried from the circle initialisation.
    """
    cdef double complex[:, :] c = np.ascontiguousarray(coeff_rows, dtype=np.complex128)
    cdef Py_ssize_t nrows = c.shape[0]
    cdef Py_ssize_t d = c.shape[1] - 1
    roots = np.empty((nrows, max(d, 0)), dtype=np.complex128)
    iters = np.empty(nrows, dtype=np.int64)
    cdef double complex[:, :] x = roots
    cdef long long[:] its = iters
    cdef Py_ssize_t row, i
    cdef int it
    with nogil:
        for row in range(nrows):
            if warm and row > 0 and its[row - 1] >= 0:
                for i in range(d):
                    x[row, i] = x[row - 1, i]
                it = _aberth(c[row], x[row], tol, maxiter // 4 + 8, False, 0.4, 1.0)
                if it < 0:
                    it = _aberth(c[row], x[row], tol, maxiter, True, 0.4, 1.0)
            else:
                it = _aberth(c[row], x[row], tol, maxiter, True, 0.4, 1.0)
            its[row] = it
    return roots, iters


def segment_intersections(xs, ys, bint closed=True, double snap=1e-9):
    """Proper crossings between non-adjacent segments of a polyline.

    Returns arrays ``(i, j, s, t)`` with segment i hit at parameter s and
    segment j at parameter t, i < j.
    """
    cdef double[:] x = np.ascontiguousarray(xs, dtype=np.float64)
    cdef double[:] y = np.ascontiguousarray(ys, dtype=np.float64)
    cdef Py_ssize_t npts = x.shape[0]
    cdef Py_ssize_t nseg = npts if closed else npts - 1
    cdef Py_ssize_t i, j, i1, j1
    cdef double ax, ay, bx, by, cx, cy, dx, dy, den, s, t, ex, ey
    cdef double lo = -snap, hi = 1.0 + snap
    out_i = []
    out_j = []
    out_s = []
    out_t = []
    for i in range(nseg):
        i1 = (i + 1) % npts
        ax = x[i]
        ay = y[i]
        bx = x[i1] - ax
        by = y[i1] - ay
        for j in range(i + 2, nseg):
            if closed and i == 0 and j == nseg - 1:
                continue
            j1 = (j + 1) % npts
            cx = x[j]
            cy = y[j]
            dx = x[j1] - cx
            dy = y[j1] - cy
            den = bx * dy - by * dx
            if fabs(den) < 1e-300:
                continue
            ex = cx - ax
            ey = cy - ay
            s = (ex * dy - ey * dx) / den
            if s < lo or s > hi:
                continue
            t = (ex * by - ey * bx) / den
            if t < lo or t > hi:
                continue
            out_i.append(i)
            out_j.append(j)
            out_s.append(s)
            out_t.append(t)
    return (np.asarray(out_i, dtype=np.int64), np.asarray(out_j, dtype=np.int64),
            np.asarray(out_s, dtype=np.float64), np.asarray(out_t, dtype=np.float64))
