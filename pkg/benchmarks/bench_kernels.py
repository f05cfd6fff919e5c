"""Time the compiled and numpy kernel backends on the workloads the library runs.

Usage::

    python3 benchmarks/bench_kernels.py [--repeat 5] [--rows 2048]
"""

import argparse
import time

import numpy as np

from harmtri import kernels
from harmtri.core import HarmonicTrinomial
from harmtri.geometry import b_locus_curve
from harmtri.roots import companion_polynomial, find_all_roots


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads(rows):
    h = HarmonicTrinomial(1, 6, 1, 2, 3)
    vs = np.geomspace(0.5, 2.5, rows)
    batch = np.array([companion_polynomial(h, v) for v in vs])
    curve = b_locus_curve(5, 3, 0.5, 1.0, 4096)
    return {
        "aberth_batch (warm scan)": lambda: kernels.aberth_batch(batch, 1e-14, 500, True),
        "aberth_batch (cold)": lambda: kernels.aberth_batch(batch[:256], 1e-14, 500, False),
        "segment_intersections (4096-gon)": lambda: kernels.segment_intersections(curve.real, curve.imag),
        "find_all_roots z^5+6conj(z)^3+1": lambda: find_all_roots(h),
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--rows", type=int, default=2048)
    args = ap.parse_args(argv)

    backends = kernels.available_backends()
    results = {}
    for name in backends:
        with kernels.use_backend(name):
            for label, fn in workloads(args.rows).items():
                fn()  # warm-up
                results[label, name] = best_of(fn, args.repeat)

    labels = list(workloads(16))
    print(f"{'workload':36s}" + "".join(f"{b:>12s}" for b in backends) + ("     speedup" if len(backends) > 1 else ""))
    for label in labels:
        row = f"{label:36s}" + "".join(f"{results[label, b] * 1e3:10.2f}ms" for b in backends)
        if len(backends) > 1:
            row += f"{results[label, 'python'] / results[label, 'cython']:11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
