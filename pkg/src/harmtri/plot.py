"""Deterministic SVG figures: coefficient-plane loci with rays, and root plots.

Even rays are drawn dotted and odd rays dashed.  Output bytes depend only on
the inputs and the matplotlib version (fixed hash salt, no timestamp).
"""

import io

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402
import numpy as np  # noqa: E402

from .geometry import B_LOCUS, b_locus_curve, c_locus_curve, ray_set, singular_disk_radius  # noqa: E402

RAY_STYLE = {"even": ":", "odd": "--"}
FIGSIZE_ONE = (6.0, 6.0)
FIGSIZE_TWO = (12.0, 6.0)
PAD = 0.10


def _fit(ax, points):
    pts = np.asarray(points, dtype=np.complex128)
    lo_x, hi_x = pts.real.min(), pts.real.max()
    lo_y, hi_y = pts.imag.min(), pts.imag.max()
    span = max(hi_x - lo_x, hi_y - lo_y, 1e-12)
    cx, cy = 0.5 * (lo_x + hi_x), 0.5 * (lo_y + hi_y)
    half = 0.5 * span * (1.0 + 2.0 * PAD)
    ax.set_xlim(cx - half, cx + half)
    ax.set_ylim(cy - half, cy + half)
    ax.set_aspect("equal")
    return half


def draw_parameter_plane(ax, n, m, fixed, v, kind=B_LOCUS, samples=2048, marker=None, show_rho=True):
    """Locus polyline at radius ``v``, the ray set and (for b-loci) the disk of radius rho."""
    if kind == B_LOCUS:
        curve = b_locus_curve(n, m, fixed, v, samples)
        label = "b"
    else:
        curve = c_locus_curve(n, m, fixed, v, samples)
        label = "c"
    closed = np.append(curve, curve[:1])
    ax.plot(closed.real, closed.imag, "-", color="tab:blue", lw=1.0, label=f"{label}-locus, v={v:.6g}")
    extent = list(curve) + [0j]
    if marker is not None:
        extent.append(complex(marker))
    rho = None
    if kind == B_LOCUS and show_rho:
        rho = singular_disk_radius(n, m, abs(complex(fixed)))
        extent.extend([rho, -rho, 1j * rho, -1j * rho])
    half = _fit(ax, extent)
    if kind == B_LOCUS:
        reach = 4.0 * half + np.abs(np.asarray(extent)).max()
        for ray in ray_set(n, m, fixed):
            tip = reach * np.exp(1j * ray.angle)
            ax.plot([0.0, tip.real], [0.0, tip.imag], RAY_STYLE[ray.parity], color="0.35", lw=0.8)
    if rho is not None:
        t = np.linspace(0.0, 2.0 * np.pi, 721)
        ax.plot(rho * np.cos(t), rho * np.sin(t), "-", color="tab:red", lw=0.8, label=f"rho={rho:.6g}")
    if marker is not None:
        ax.plot([complex(marker).real], [complex(marker).imag], "o", color="black", ms=5, label=f"{label} value")
    ax.set_xlabel(f"Re {label}")
    ax.set_ylabel(f"Im {label}")
    ax.legend(loc="upper right", fontsize="small")
    ax.grid(True, lw=0.3)


def draw_root_plane(ax, roots, circles=(), critical=None):
    """Root markers with the circles ``|z| = v`` and the critical circle."""
    values = [r.value for r in roots]
    t = np.linspace(0.0, 2.0 * np.pi, 721)
    extent = list(values) + [0j]
    for v in circles:
        ax.plot(v * np.cos(t), v * np.sin(t), "-", color="0.5", lw=0.8)
        extent.extend([v, -v, 1j * v, -1j * v])
    if critical is not None:
        ax.plot(critical * np.cos(t), critical * np.sin(t), "--", color="tab:red", lw=0.8, label="critical circle")
        extent.extend([critical, -critical])
    styles = {"sense_preserving": ("o", "tab:blue"), "sense_reversing": ("s", "tab:orange"),
              "singular": ("x", "tab:red")}
    for orient, (mk, col) in styles.items():
        pts = [r.value for r in roots if r.orientation == orient]
        if pts:
            arr = np.array(pts)
            ax.plot(arr.real, arr.imag, mk, color=col, ms=5, ls="none", label=orient.replace("_", " "))
    _fit(ax, extent if len(extent) > 1 else [1 + 1j, -1 - 1j])
    ax.set_xlabel("Re z")
    ax.set_ylabel("Im z")
    if ax.get_legend_handles_labels()[0]:
        ax.legend(loc="upper right", fontsize="small")
    ax.grid(True, lw=0.3)


def render_svg(draw_calls, title=None) -> bytes:
    """Run each ``draw(ax)`` on its own panel and return the SVG bytes."""
    with plt.rc_context({"svg.hashsalt": "harmtri", "svg.fonttype": "path"}):
        fig, axes = plt.subplots(1, len(draw_calls), figsize=FIGSIZE_TWO if len(draw_calls) == 2 else FIGSIZE_ONE,
                                 squeeze=False)
        for ax, draw in zip(axes[0], draw_calls):
            draw(ax)
        if title:
            fig.suptitle(title)
        fig.tight_layout()
        buf = io.BytesIO()
        fig.savefig(buf, format="svg", metadata={"Date": None})
        plt.close(fig)
    return buf.getvalue()
