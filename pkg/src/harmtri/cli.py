"""Command-line front end.

Trinomials come from a JSON file (``--spec``) or inline flags.  Complex
numbers are ``[re, im]`` pairs; a bare number is taken as real.  A report
written by ``harmtri report`` is also accepted as a spec: its ``input`` block
supplies the trinomial and the default ``--v``, ``--samples`` and tolerances.

Exit codes: 0 success, 2 invalid input, 3 numerical failure, 4 I/O error.
"""

import argparse
import io
import json
import math
import os
import sys
import tempfile

import numpy as np

from . import __version__
from .core import DEFAULT_TOL, HarmonicTrinomial, Tolerances
from .egervary import is_equivalent
from .errors import InvalidGeometry
from .geometry import (
    B_LOCUS,
    C_LOCUS,
    b_locus_curve,
    b_locus_params,
    c_locus_curve,
    c_locus_params,
    critical_circle_radius,
    locus_thetas,
    singular_report,
    verify_locus,
)
from .report import build_report, count_entries, dumps
from .roots import find_all_roots, moduli_spectrum

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_NUMERICAL = 3
EXIT_IO = 4


class CliError(Exception):
    def __init__(self, message, code):
        super().__init__(message)
        self.code = code


# --------------------------------------------------------------------- input

def _read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc.strerror}", EXIT_IO) from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise CliError(f"{path} is not valid JSON: {exc}", EXIT_INVALID) from exc


def load_spec(path):
    """Return ``(trinomial, defaults)``; defaults hold v/samples/tolerances from a report echo."""
    doc = _read_json(path)
    if not isinstance(doc, dict):
        raise CliError(f"{path}: expected a JSON object", EXIT_INVALID)
    if "input" in doc and isinstance(doc["input"], dict):
        doc = doc["input"]
    h = HarmonicTrinomial.from_dict(doc)
    defaults = {k: doc[k] for k in ("v", "samples", "tolerances", "compare") if k in doc}
    return h, defaults


def _inline_spec(args):
    if args.n is None or args.m is None:
        raise CliError("give --spec FILE or inline --n and --m (plus coefficient flags)", EXIT_INVALID)
    return HarmonicTrinomial(complex(args.a_re, args.a_im), complex(args.b_re, args.b_im),
                             complex(args.c_re, args.c_im), args.n, args.m)


def _specs(args):
    if args.spec:
        return [load_spec(p) for p in args.spec]
    return [(_inline_spec(args), {})]


def _tolerances(args, defaults):
    if args.tol_file:
        data = _read_json(args.tol_file)
    elif "tolerances" in defaults:
        data = defaults["tolerances"]
    else:
        return DEFAULT_TOL
    try:
        return Tolerances.from_dict(data)
    except (TypeError, ValueError) as exc:
        raise CliError(f"bad tolerances: {exc}", EXIT_INVALID) from exc


def _vs(args, defaults):
    vs = args.v if args.v else defaults.get("v", [])
    for v in vs:
        if not (math.isfinite(v) and v > 0):
            raise CliError(f"radius must be positive and finite, got {v}", EXIT_INVALID)
    return [float(v) for v in vs]


def _samples(args, defaults):
    samples = args.samples if args.samples is not None else int(defaults.get("samples", 2048))
    if samples < 16:
        raise CliError(f"--samples must be at least 16, got {samples}", EXIT_INVALID)
    return samples


# -------------------------------------------------------------------- output

def atomic_write(path, data):
    """Write bytes or text to ``path`` via a temporary file in the same directory."""
    if isinstance(data, str):
        data = data.encode("utf-8")
    directory = os.path.dirname(os.path.abspath(path))
    try:
        fd, tmp = tempfile.mkstemp(prefix=".harmtri-", dir=directory)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror}", EXIT_IO) from exc
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        umask = os.umask(0)
        os.umask(umask)
        os.chmod(tmp, 0o666 & ~umask)
        os.replace(tmp, path)
    except OSError as exc:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise CliError(f"cannot write {path}: {exc.strerror}", EXIT_IO) from exc


def _fmt_c(z):
    z = complex(z)
    return f"{z.real:.10g}{z.imag:+.10g}i"


def _emit(args, doc, text):
    """Structured document to --out (if given); stdout gets text or the document."""
    if args.out:
        atomic_write(args.out, dumps(doc))
    sys.stdout.write(dumps(doc) if args.format == "structured" else text)


# ------------------------------------------------------------------ commands

def cmd_roots(args):
    (h, defaults), = _specs(args)[:1]
    tol = _tolerances(args, defaults)
    roots = find_all_roots(h, tol, _samples(args, defaults))
    spectrum = moduli_spectrum(h, tol, roots)
    lines = [f"h(z) = {h}", f"{len(roots)} roots ({roots.method})",
             f"{'modulus':>16} {'argument':>12} {'orientation':>17} {'class':>9} {'residual':>10}"]
    for r in roots:
        lines.append(f"{r.modulus:16.10f} {r.argument:12.8f} {r.orientation:>17} "
                     f"{r.multiplicity_class:>9} {r.residual:10.2e}")
    lines.append("spectrum: " + ", ".join(f"{mod:.8g} x{cnt}" for mod, cnt in spectrum))
    doc = {"input": h.to_dict(), "roots": roots.to_dict(),
           "spectrum": [{"modulus": mod, "count": cnt} for mod, cnt in spectrum]}
    _emit(args, doc, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_count(args):
    (h, defaults), = _specs(args)[:1]
    tol = _tolerances(args, defaults)
    vs = _vs(args, defaults)
    if not vs:
        raise CliError("count needs at least one --v", EXIT_INVALID)
    entries = count_entries(h, vs, tol)
    lines = [f"h(z) = {h}"]
    for e in entries:
        if "error" in e:
            extra = ""
            if "nearest_admissible" in e:
                lo, hi = e["nearest_admissible"]
                extra = f"; nearest admissible v: {lo!r} below, {hi!r} above"
            lines.append(f"v = {e['v']:.10g}: {e['error']}: {e['message']}{extra}")
        else:
            lines.append(f"v = {e['v']:.10g}: regime {e['regime']}, count {e['count']}, "
                         f"P* = {e['p_star']:.12g}, w*(v) = {e['w_star_at_v']:.12g}, "
                         f"w* range [{e['w_star_range'][0]:.6g}, {e['w_star_range'][1]:.6g}]")
    _emit(args, {"input": h.to_dict(), "counts": entries}, "\n".join(lines) + "\n")
    ok = any("error" not in e for e in entries)
    if not ok:
        sys.stderr.write("harmtri: no radius could be counted\n")
    return EXIT_OK if ok else EXIT_INVALID


def cmd_equiv(args):
    specs = _specs(args)
    if len(specs) != 2:
        raise CliError("equiv needs exactly two --spec files", EXIT_INVALID)
    (h1, d1), (h2, _) = specs
    tol = _tolerances(args, d1)
    w = is_equivalent(h1, h2, tol)
    verdict = "equivalent" if w.equivalent else "not equivalent"
    text = (f"h1(z) = {h1}\nh2(z) = {h2}\n{verdict}: branch {w.branch}, "
            f"congruence defect {w.congruence_defect:.3e} rad, ratio consistent {w.ratio_consistent}\n")
    _emit(args, {"input": [h1.to_dict(), h2.to_dict()], "equivalence": w.to_dict()}, text)
    return EXIT_OK


def _fixed_coefficient(args, kind):
    if args.fixed_re is not None or args.fixed_im is not None:
        fixed = complex(args.fixed_re or 0.0, args.fixed_im or 0.0)
        if args.n is None or args.m is None:
            raise CliError("--n and --m are required with --fixed-re/--fixed-im", EXIT_INVALID)
        n, m = args.n, args.m
        HarmonicTrinomial(1.0, 0.0, 0.0, n, m)  # exponent validation
        return n, m, fixed, {}
    (h, defaults), = _specs(args)[:1]
    return h.n, h.m, (h.c if kind == B_LOCUS else h.b) / h.a, defaults


def cmd_locus(args):
    kind = B_LOCUS if args.kind == "b" else C_LOCUS
    n, m, fixed, defaults = _fixed_coefficient(args, kind)
    if fixed == 0:
        raise CliError(f"the fixed coefficient of a {args.kind}-locus must be nonzero", EXIT_INVALID)
    vs = _vs(args, defaults)
    if len(vs) != 1:
        raise CliError("locus needs exactly one --v", EXIT_INVALID)
    v = vs[0]
    samples = _samples(args, defaults)
    tol = _tolerances(args, defaults)
    curve = (b_locus_curve if kind == B_LOCUS else c_locus_curve)(n, m, fixed, v, samples)
    thetas = locus_thetas(samples)

    buf = io.StringIO()
    np.savetxt(buf, np.column_stack([thetas, curve.real, curve.imag]), fmt="%.17g", delimiter=",",
               header="theta,re,im", comments="")
    csv = buf.getvalue()

    doc = {"kind": kind, "n": n, "m": m, "fixed": fixed, "v": v, "samples": samples, "params": None,
           "warnings": []}
    try:
        doc["params"] = (b_locus_params if kind == B_LOCUS else c_locus_params)(n, m, fixed, v).to_dict()
    except InvalidGeometry as exc:
        doc["warnings"].append(str(exc))
        sys.stderr.write(f"harmtri: warning: {exc}\n")
    failed = 0
    if args.verify:
        checks = verify_locus(kind, n, m, fixed, v, samples, stride=32, tol=tol)
        failed = sum(not c.ok for c in checks)
        doc["verification"] = {"checked": len(checks), "failed": failed,
                               "samples": [c.to_dict() for c in checks]}

    if args.out:
        atomic_write(args.out, csv)
    if args.format == "structured":
        sys.stdout.write(dumps(doc))
    else:
        lines = [f"{kind} for n={n}, m={m}, fixed={_fmt_c(fixed)}, v={v:.10g}, {samples} samples"]
        p = doc["params"]
        if p is not None:
            R, r, d = p.get("exact", [f"{p[k]:.12g}" for k in ("R", "r", "d")])
            lines.append(f"trochoid: R={R}, r={r}, d={d}, phase={p['phase']:.12g}")
        if args.verify:
            lines.append(f"verification: {len(checks) - failed}/{len(checks)} samples have a root of modulus v")
        if not args.out:
            lines.append(csv.rstrip("\n"))
        sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_NUMERICAL if failed else EXIT_OK


def cmd_singular(args):
    (h, defaults), = _specs(args)[:1]
    if h.c == 0:
        raise CliError("singular analysis needs c != 0", EXIT_INVALID)
    g = h.normalized()
    vs = _vs(args, defaults)
    tol = _tolerances(args, defaults)
    rep = singular_report(g.n, g.m, g.c, vs, g.b if g.b != 0 else None, _samples(args, defaults), tol)
    if h.b != 0:
        rep.critical_circle_radius = critical_circle_radius(h)
    lines = [f"n={g.n}, m={g.m}, c={_fmt_c(g.c)} (monic form)", f"singular disk radius rho = {rep.rho:.10g}"]
    for b, v in rep.cusps:
        lines.append(f"cusp: b = {_fmt_c(b)} at v = {v:.12g}")
    for p in rep.double_points:
        lines.append(f"double point: b = {_fmt_c(p.value)} at v = {p.v:.10g}")
    if rep.critical_circle_radius is not None:
        lines.append(f"critical circle radius = {rep.critical_circle_radius:.12g}")
    for d in rep.discrepancies:
        lines.append(f"note: reference radius {d['reference']:g} differs from formula {d['formula']:.6g}")
    _emit(args, {"input": h.to_dict(), "singular": rep.to_dict()}, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_plot(args):
    from .plot import draw_parameter_plane, draw_root_plane, render_svg

    (h, defaults), = _specs(args)[:1]
    tol = _tolerances(args, defaults)
    vs = _vs(args, defaults)
    kind = B_LOCUS if args.kind == "b" else C_LOCUS
    roots = [] if args.no_roots else list(find_all_roots(h, tol, _samples(args, defaults)))
    g = h.normalized()
    fixed = g.c if kind == B_LOCUS else g.b
    marker = g.b if kind == B_LOCUS else g.c
    if not vs:
        vs = [min(r.modulus for r in roots)] if roots else [1.0]
    panels = []
    if fixed != 0:
        panels.append(lambda ax: draw_parameter_plane(ax, g.n, g.m, fixed, vs[0], kind, args.locus_samples,
                                                      marker=marker))
    if roots or not panels:
        crit = critical_circle_radius(h) if h.b != 0 else None
        panels.append(lambda ax: draw_root_plane(ax, roots, vs, crit))
    svg = render_svg(panels, title=str(h))
    if args.out:
        atomic_write(args.out, svg)
    else:
        sys.stdout.buffer.write(svg)
    return EXIT_OK


def cmd_report(args):
    specs = _specs(args)
    if len(specs) > 2:
        raise CliError("report takes one spec, or two for an equivalence test", EXIT_INVALID)
    h, defaults = specs[0]
    compare = specs[1][0] if len(specs) == 2 else None
    if compare is None and "compare" in defaults:
        compare = HarmonicTrinomial.from_dict(defaults["compare"])
    tol = _tolerances(args, defaults)
    report, errors = build_report(h, _vs(args, defaults), tol, _samples(args, defaults), compare)
    text = dumps(report)
    if args.out:
        atomic_write(args.out, text)
    if args.format == "structured" and not args.out:
        sys.stdout.write(text)
    else:
        sys.stdout.write(summary(report))
    if not errors:
        return EXIT_OK
    numerical = {"NoConvergence", "SingularJacobian", "OracleIncomplete"}
    return EXIT_NUMERICAL if any(e["error"] in numerical for e in errors) else EXIT_INVALID


def summary(report):
    """Short human-readable digest of a report."""
    inp = report["input"]
    h = HarmonicTrinomial.from_dict(inp)
    lines = [f"h(z) = {h}"]
    if report["triangle_profile"]:
        tp = report["triangle_profile"]
        lines.append(f"triangle region: ({tp['c_radius']:.8g}, {tp['a_radius']:.8g}), b-type {tp['b_kind']}")
    for e in report["counts"]:
        if "error" in e:
            lines.append(f"v = {e['v']:.8g}: {e['error']}")
        else:
            lines.append(f"v = {e['v']:.8g}: {e['count']} roots below")
    if report["roots"]:
        lines.append(f"{len(report['roots']['roots'])} roots; moduli "
                     + ", ".join(f"{s['modulus']:.6g} x{s['count']}" for s in report["spectrum"]))
    if report["uj"]:
        uj = report["uj"]["algebraic"]
        lines.append("U_j membership: {" + ", ".join(str(j) for j in uj["member_set"]) + "}")
    if report["singular"]:
        lines.append(f"singular disk radius: {report['singular']['rho']:.8g}")
    if report["equivalence"]:
        eq = report["equivalence"]
        lines.append(f"equivalent: {eq['equivalent']} (defect {eq['congruence_defect']:.3e})")
    for e in report["meta"]["errors"]:
        lines.append(f"error in {e['section']}: {e['error']}: {e['message']}")
    return "\n".join(lines) + "\n"


# -------------------------------------------------------------------- parser

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", action="append", metavar="FILE",
                        help="JSON trinomial spec or a previously written report")
    for name in ("a", "b", "c"):
        common.add_argument(f"--{name}-re", type=float, default=1.0 if name == "a" else 0.0)
        common.add_argument(f"--{name}-im", type=float, default=0.0)
    common.add_argument("--n", type=int)
    common.add_argument("--m", type=int)
    common.add_argument("--v", type=float, action="append", help="radius (repeatable)")
    common.add_argument("--samples", type=int, default=None, help="scan/locus samples (default 2048)")
    common.add_argument("--tol-file", metavar="FILE", help="JSON object of tolerance overrides")
    common.add_argument("--out", metavar="PATH")
    common.add_argument("--format", choices=("text", "structured"), default="text")

    parser = argparse.ArgumentParser(prog="harmtri", description="Analyse harmonic trinomials "
                                     "a z^(n+m) + b conj(z)^m + c.")
    parser.add_argument("--version", action="version", version=f"harmtri {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("roots", parents=[common], help="all roots with orientation and spectrum") \
        .set_defaults(func=cmd_roots)
    sub.add_parser("count", parents=[common], help="number of roots of modulus below each --v") \
        .set_defaults(func=cmd_count)
    sub.add_parser("equiv", parents=[common], help="equivalence test of two --spec files") \
        .set_defaults(func=cmd_equiv)

    p = sub.add_parser("locus", parents=[common], help="sampled coefficient locus as CSV")
    p.add_argument("--kind", choices=("b", "c"), default="b")
    p.add_argument("--fixed-re", type=float)
    p.add_argument("--fixed-im", type=float)
    p.add_argument("--verify", action="store_true", help="solve every 32nd sample and check the radius")
    p.set_defaults(func=cmd_locus)

    sub.add_parser("singular", parents=[common], help="disk radius, cusps, double points") \
        .set_defaults(func=cmd_singular)

    p = sub.add_parser("plot", parents=[common], help="SVG of the locus, rays and roots")
    p.add_argument("--kind", choices=("b", "c"), default="b")
    p.add_argument("--locus-samples", type=int, default=2048)
    p.add_argument("--no-roots", action="store_true", help="draw the coefficient plane only")
    p.set_defaults(func=cmd_plot)

    sub.add_parser("report", parents=[common], help="full JSON report (--out) and summary") \
        .set_defaults(func=cmd_report)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        sys.stderr.write(f"harmtri: {exc}\n")
        return exc.code
    except ValueError as exc:  # InvalidTrinomial, ExponentMismatch, OnBoundary, ...
        sys.stderr.write(f"harmtri: {type(exc).__name__}: {exc}\n")
        return EXIT_INVALID
    except ArithmeticError as exc:  # NoConvergence, SingularJacobian, OracleIncomplete
        sys.stderr.write(f"harmtri: {type(exc).__name__}: {exc}\n")
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
