"""Command-line front end.

Every subcommand emits a plot-ready table (CSV with a header row, 12
significant digits) or the same values as JSON with a schema version field.
Angles are taken in degrees here and converted to radians at this boundary;
everything below works in radians and dimensionless groups.

Exit codes: 0 success, 1 numerical failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import approximant as approximant_mod
from . import asymptotics, bubble_series, meniscus_series, shape_core, tensiometer
from .errors import RotameniscusError
from .shape_core import GridSpec

SCHEMA = "rotameniscus/1"

_METHODS = ("quadrature", "series", "asymptotic", "approximant")


class UsageError(Exception):
    pass


def _fmt(x):
    return f"{float(x):.12g}"


def _stable(x):
    # floats rounded through the same 12-digit channel the CSV uses, so the
    # two formats mirror each other and repeated runs are byte-identical
    return float(_fmt(x)) if isinstance(x, (float, np.floating)) else x


def _open_out(args):
    if args.out:
        return open(args.out, "w", encoding="ascii", newline="\n")
    return sys.stdout


def _emit_table(args, columns, rows, extra=None):
    out = _open_out(args)
    try:
        if args.format == "csv":
            print(",".join(columns), file=out)
            for row in rows:
                print(",".join(_fmt(v) if isinstance(v, (float, np.floating))
                               else str(v) for v in row), file=out)
        else:
            doc = {
                "schema": SCHEMA,
                "columns": list(columns),
                "rows": [[_stable(v) for v in row] for row in rows],
            }
            if extra:
                doc.update({k: _stable(v) for k, v in extra.items()})
            print(json.dumps(doc), file=out)
    finally:
        if out is not sys.stdout:
            out.close()


def _emit_record(args, fields):
    out = _open_out(args)
    try:
        if args.format == "csv":
            print(",".join(fields), file=out)
            print(",".join(_fmt(v) if isinstance(v, (float, np.floating))
                           else str(v) for v in fields.values()), file=out)
        else:
            doc = {"schema": SCHEMA}
            doc.update({k: _stable(v) for k, v in fields.items()})
            print(json.dumps(doc), file=out)
    finally:
        if out is not sys.stdout:
            out.close()


def _parse_lambda_range(spec):
    parts = spec.split(":")
    if len(parts) != 3:
        raise UsageError("--lambda-range must be a:b:n")
    try:
        a, b, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError as exc:
        raise UsageError(f"bad --lambda-range {spec!r}: {exc}") from None
    if n < 1:
        raise UsageError("--lambda-range needs n >= 1")
    return np.linspace(a, b, n)


def _lambda_values(args):
    if getattr(args, "lambda_range", None):
        return _parse_lambda_range(args.lambda_range)
    if getattr(args, "lam", None) is not None:
        return np.array([args.lam])
    raise UsageError("provide --lambda or --lambda-range")


def _geometry_alpha(args):
    geometry = args.geometry
    alpha_deg = getattr(args, "alpha", None)
    if geometry == "bubble":
        if alpha_deg not in (None, 0.0):
            raise UsageError("bubble geometry forbids --alpha != 0")
        return geometry, 0.0
    if alpha_deg is None:
        alpha_deg = 90.0
    if not 0.0 <= alpha_deg <= 180.0:
        raise UsageError("--alpha must lie in [0, 180] degrees")
    return geometry, math.radians(alpha_deg)


def _terms_list(args, default):
    raw = getattr(args, "terms", None)
    if raw is None:
        return [default]
    try:
        vals = [int(v) for v in str(raw).split(",")]
    except ValueError:
        raise UsageError(f"--terms must be an integer or comma list, got {raw!r}")
    if any(v < 1 for v in vals):
        raise UsageError("--terms entries must be >= 1")
    return vals


def _precision():
    raw = os.environ.get("ROTAMENISCUS_PRECISION")
    if not raw:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"ROTAMENISCUS_PRECISION must be an integer, got {raw!r}")


def _build_for(geometry, n, precision):
    if geometry == "meniscus":
        return approximant_mod.meniscus_approximant(n, precision)
    return approximant_mod.bubble_approximant(n, precision)


# ---------------------------------------------------------------------------
# subcommands


def cmd_critical(args):
    alpha_deg = args.alpha if args.alpha is not None else 90.0
    if not 0.0 <= alpha_deg <= 180.0:
        raise UsageError("--alpha must lie in [0, 180] degrees")
    alpha = math.radians(alpha_deg)
    lc, rc = shape_core.critical_params(alpha)
    if getattr(args, "lambda_range", None):
        lams = _parse_lambda_range(args.lambda_range)
        lmin = shape_core.lambda_min(alpha)
        if any(float(l) < lmin for l in lams):
            raise UsageError(
                f"inflection sweep needs lambda >= lambda_min = {lmin:.6g}"
            )
        rows = []
        for lam in lams:
            r0 = shape_core.inflection_radius(alpha, float(lam))
            rows.append((float(lam), r0, shape_core.max_sin_theta(alpha, float(lam))))
        _emit_table(args, ["lambda", "r0", "max_sin_theta"], rows)
        return 0
    fields = {
        "alpha_deg": math.degrees(alpha),
        "lambda_c": lc,
        "r_c": rc,
        "lambda_min": shape_core.lambda_min(alpha),
        "r_w": shape_core.master_rescale(alpha)[0],
    }
    _emit_record(args, fields)
    return 0


def cmd_shape(args):
    geometry, alpha = _geometry_alpha(args)
    prof = shape_core.profile(geometry, alpha, args.lam, GridSpec(n=args.grid))
    r, h, st = prof.full_curve()
    rows = list(zip(r.tolist(), h.tolist(), st.tolist()))
    _emit_table(args, ["r", "h", "sin_theta"], rows)
    return 0


def _length_one(geometry, alpha, lam, method, n_terms, tol, precision):
    if method == "quadrature":
        return shape_core.axial_length_quadrature(geometry, alpha, lam)
    if geometry == "meniscus" and not math.isclose(alpha, math.pi / 2.0):
        raise UsageError(
            f"method {method!r} covers the meniscus at normal contact only; "
            "use --alpha 90 or --method quadrature"
        )
    if method == "series":
        if geometry == "meniscus":
            return meniscus_series.meniscus_H_series(lam, tol=tol).value
        return bubble_series.bubble_H_series(lam, tol=tol).value
    if method == "asymptotic":
        law = asymptotics.MENISCUS_LAW if geometry == "meniscus" else asymptotics.BUBBLE_LAW
        if not law.is_asymptotic(lam):
            print(
                f"warning: asymptotic law evaluated far from lambda_c "
                f"(lam={lam:g}, lambda_c={law.lambda_c:g}); value is indicative only",
                file=sys.stderr,
            )
        return law(lam)
    appr = _build_for(geometry, n_terms, precision)
    return approximant_mod.eval_approximant(appr, lam)


def cmd_length(args):
    geometry, alpha = _geometry_alpha(args)
    methods = [m.strip() for m in args.method.split(",")]
    for m in methods:
        if m not in _METHODS:
            raise UsageError(f"--method entries must be in {_METHODS}, got {m!r}")
    default_terms = 20 if geometry == "meniscus" else 15
    terms = _terms_list(args, default_terms)
    precision = _precision()
    lams = _lambda_values(args)

    columns = ["lambda"]
    for m in methods:
        if m == "approximant" and len(terms) > 1:
            columns += [f"H_approximant_N{n}" for n in terms]
        else:
            columns.append(f"H_{m}")
    rows = []
    for lam in lams:
        row = [float(lam)]
        for m in methods:
            if m == "approximant" and len(terms) > 1:
                row += [_length_one(geometry, alpha, float(lam), m, n, args.tol, precision)
                        for n in terms]
            else:
                row.append(_length_one(geometry, alpha, float(lam), m, terms[0],
                                       args.tol, precision))
        rows.append(row)
    _emit_table(args, columns, rows)
    return 0


def cmd_series(args):
    geometry, alpha = _geometry_alpha(args)
    if geometry == "meniscus" and not math.isclose(alpha, math.pi / 2.0):
        raise UsageError("the length series covers the meniscus at normal contact only")
    n_terms = _terms_list(args, 40)[0]
    if args.coefficients:
        if geometry == "meniscus":
            k_max = 2 * n_terms - 1
            a = meniscus_series.a_coeffs(k_max)
            b = meniscus_series.b_coeffs(k_max)
            rows = [(k, a[k], b[k], a[k] * b[k]) for k in range(1, k_max + 1, 2)]
            _emit_table(args, ["n", "a_n", "b_n", "a_n_b_n"], rows)
        else:
            C = bubble_series.bubble_C_coeffs(n_terms - 1)
            rows = [(n, C[n]) for n in range(n_terms)]
            _emit_table(args, ["n", "C_n"], rows)
        return 0
    if args.lam is None:
        raise UsageError("series convergence table needs --lambda")
    rows = []
    for n in range(1, n_terms + 1):
        if geometry == "meniscus":
            res = meniscus_series.meniscus_H_series(args.lam, n_terms=n)
        else:
            res = bubble_series.bubble_H_series(args.lam, n_terms=n)
        rows.append((n, res.value, res.tail_estimate))
    _emit_table(args, ["n_terms", "H_partial", "tail_estimate"], rows)
    return 0


def cmd_approximant(args):
    geometry, _ = _geometry_alpha(args)
    n = _terms_list(args, 20 if geometry == "meniscus" else 15)[0]
    precision = _precision()
    if args.action == "eval" and args.file:
        appr = approximant_mod.load(args.file)
    else:
        appr = _build_for(geometry, n, precision)
    if args.action in ("build", "export"):
        text = approximant_mod.to_text(appr)
        if args.action == "export":
            if not args.out:
                raise UsageError("approximant export needs --out")
            with open(args.out, "w", encoding="ascii", newline="\n") as fh:
                fh.write(text)
            return 0
        sys.stdout.write(text)
        return 0
    lams = _lambda_values(args)
    rows = [(float(lam), approximant_mod.eval_approximant(appr, float(lam)))
            for lam in lams]
    _emit_table(args, ["lambda", "H_approximant"], rows)
    return 0


def cmd_asymptote(args):
    geometry, alpha = _geometry_alpha(args)
    if geometry == "meniscus" and not math.isclose(alpha, math.pi / 2.0):
        raise UsageError("the asymptotic law covers the meniscus at normal contact only")
    law = asymptotics.MENISCUS_LAW if geometry == "meniscus" else asymptotics.BUBBLE_LAW
    lams = _lambda_values(args)
    if any(not law.is_asymptotic(float(l)) for l in lams):
        print(
            f"warning: some lambda values are far from lambda_c={law.lambda_c:g}; "
            "the asymptotic law is indicative only there",
            file=sys.stderr,
        )
    rows = [(float(lam), law(float(lam))) for lam in lams]
    _emit_table(args, ["lambda", "H_asymptotic"], rows)
    return 0


def cmd_volume(args):
    lams = _lambda_values(args)
    rows = []
    for lam in lams:
        H = shape_core.axial_length_quadrature("bubble", 0.0, float(lam))
        rows.append((float(lam), H, math.pi * H - tensiometer.volume_deficit(float(lam))))
    _emit_table(args, ["lambda", "H", "V"], rows)
    return 0


def cmd_invert(args):
    if args.H < 2.0:
        raise UsageError("H must be >= 2")
    lam = tensiometer.lambda_from_H(args.H)
    fields = {
        "H": args.H,
        "lambda": lam,
        "delta_percent": 100.0 * (1.0 - lam / 4.0),
        "delta_percent_asymptotic": tensiometer.delta_percent_asymptotic(args.H),
    }
    physicals = (args.omega, args.rb, args.rho)
    if any(v is not None for v in physicals):
        if any(v is None for v in physicals):
            raise UsageError("provide all of --omega, --rb, --rho or none")
        reading = tensiometer.TensiometerReading(args.omega, args.rb, args.rho, args.H)
        fields["sigma_assumed_critical"] = tensiometer.sigma_assuming_critical(reading)
        fields["sigma_corrected"] = tensiometer.sigma_corrected(reading)
    _emit_record(args, fields)
    return 0


def cmd_error_scan(args):
    geometry, alpha = _geometry_alpha(args)
    if geometry == "meniscus" and not math.isclose(alpha, math.pi / 2.0):
        raise UsageError("approximants cover the meniscus at normal contact only")
    terms = _terms_list(args, 20 if geometry == "meniscus" else 15)
    precision = _precision()
    lams = _lambda_values(args)

    def oracle(lam):
        return shape_core.axial_length_quadrature(geometry, alpha, lam)

    scans = [
        approximant_mod.error_scan(_build_for(geometry, n, precision), oracle, lams)
        for n in terms
    ]
    columns = ["lambda"] + [f"abs_err_N{n}" for n in terms]
    rows = [
        tuple([float(lams[i])] + [float(s.errors[i]) for s in scans])
        for i in range(len(lams))
    ]
    extra = {}
    for n, s in zip(terms, scans):
        extra[f"max_err_N{n}"] = s.max_error
        extra[f"argmax_lambda_N{n}"] = s.argmax_lambda
    if args.format == "csv":
        for n, s in zip(terms, scans):
            print(f"max |H_A - H| (N={n}): {s.max_error:.6g} at lambda={s.argmax_lambda:.6g}",
                  file=sys.stderr)
    _emit_table(args, columns, rows, extra=extra)
    return 0


# ---------------------------------------------------------------------------
# parser


def _add_common(p, *, geometry=True, alpha=True, lam=False, lam_range=False,
                terms=False, grid=False, method=False, tol=False):
    if geometry:
        p.add_argument("--geometry", choices=("meniscus", "bubble"),
                       default="meniscus", help="interface configuration")
    if alpha:
        p.add_argument("--alpha", type=float, default=None,
                       help="contact angle in degrees (default 90; bubble forces 0)")
    if lam:
        p.add_argument("--lambda", dest="lam", type=float, default=None,
                       help="rotational Bond number")
    if lam_range:
        p.add_argument("--lambda-range", dest="lambda_range", default=None,
                       help="sweep a:b:n (n points, endpoints included)")
    if terms:
        p.add_argument("--terms", default=None,
                       help="term count N (comma list allowed where documented)")
    if grid:
        p.add_argument("--grid", type=int, default=1001, help="profile node count")
    if method:
        p.add_argument("--method", default="quadrature",
                       help="comma list from quadrature,series,asymptotic,approximant")
    if tol:
        p.add_argument("--tol", type=float, default=1e-10, help="series tolerance")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default stdout)")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="rotameniscus",
        description="Shapes and axial lengths of rotating fluid interfaces "
                    "in zero gravity; spinning-bubble tensiometry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("critical", help="critical parameters for a contact angle")
    _add_common(p, geometry=False, lam_range=True)
    p.set_defaults(func=cmd_critical)

    p = sub.add_parser("shape", help="sampled interface profile (r, h, sin_theta)")
    _add_common(p, lam=True, grid=True)
    p.set_defaults(func=cmd_shape)

    p = sub.add_parser("length", help="axial length H by any method")
    _add_common(p, lam=True, lam_range=True, terms=True, method=True, tol=True)
    p.set_defaults(func=cmd_length)

    p = sub.add_parser("series", help="length-series partial sums or coefficients")
    _add_common(p, lam=True, terms=True)
    p.add_argument("--coefficients", action="store_true",
                   help="emit the coefficient table instead of partial sums")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("approximant", help="build, export, or evaluate an approximant")
    p.add_argument("action", choices=("build", "export", "eval"))
    _add_common(p, lam=True, lam_range=True, terms=True)
    p.add_argument("--file", default=None, help="approximant record to evaluate")
    p.set_defaults(func=cmd_approximant)

    p = sub.add_parser("asymptote", help="near-critical asymptotic length")
    _add_common(p, lam=True, lam_range=True)
    p.set_defaults(func=cmd_asymptote)

    p = sub.add_parser("volume", help="dimensionless bubble volume vs length")
    _add_common(p, geometry=False, alpha=False, lam=True, lam_range=True)
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("invert", help="infer lambda and surface tension from H")
    p.add_argument("--H", type=float, required=True,
                   help="measured length-to-max-radius ratio")
    p.add_argument("--omega", type=float, default=None, help="spin rate (rad/s)")
    p.add_argument("--rb", type=float, default=None, help="max bubble radius (m)")
    p.add_argument("--rho", type=float, default=None,
                   help="density difference (kg/m^3)")
    _add_common(p, geometry=False, alpha=False)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("error-scan", help="pointwise approximant error vs quadrature")
    _add_common(p, lam_range=True, terms=True)
    p.set_defaults(func=cmd_error_scan)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except RotameniscusError as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
