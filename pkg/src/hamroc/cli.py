"""Command-line entry point: curves, fits, simulation and the verification gate.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
import argparse
import csv
import json
import sys
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

from . import analytic, montecarlo
from .estimation import CurveMode, EmpiricalPoint, UndeterminedError, fit_curve
from .network import SignumVariant
from .roc import mroc_curve, overall_probabilities, roc_curve

DEFAULT_N = 9
DEFAULT_PRECISION = 10


class InputError(Exception):
    pass


def frac_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def decimal_str(x, precision=DEFAULT_PRECISION):
    """Correctly rounded (half-even) fixed-point rendering of an exact rational."""
    x = Fraction(x)
    scaled = round(x * 10**precision)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(precision + 1, "0")
    if precision == 0:
        return sign + digits
    return f"{sign}{digits[:-precision]}.{digits[-precision:]}"


def curve_records(curve, precision, mroc=False):
    rows = []
    for pt in curve.points:
        row = {
            "theta": pt.theta,
            "f_frac": frac_str(pt.F),
            "p_frac": frac_str(pt.P),
            "f": decimal_str(pt.F, precision),
            "p": decimal_str(pt.P, precision),
        }
        if mroc:
            row["pcr_frac"] = frac_str(pt.p_CR)
            row["pcr"] = decimal_str(pt.p_CR, precision)
        rows.append(row)
    return rows


def write_records(rows, fmt, out):
    if fmt == "json":
        json.dump(rows, out, indent=2)
        out.write("\n")
        return
    if not rows:
        return
    writer = csv.DictWriter(out, fieldnames=list(rows[0]), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)


def read_empirical_csv(path):
    """Parse an `f,p[,label]` CSV into empirical points; row numbers count the header as 1."""
    try:
        with open(path, newline="", encoding="utf-8") as fh:
            reader = csv.DictReader(fh)
            if reader.fieldnames is None or not {"f", "p"} <= set(reader.fieldnames):
                raise InputError(f"{path}: expected header 'f,p[,label]'")
            points = []
            for lineno, row in enumerate(reader, start=2):
                try:
                    points.append(EmpiricalPoint(Fraction(row["f"]), Fraction(row["p"]), row.get("label") or None))
                except (ValueError, TypeError, ZeroDivisionError) as exc:
                    raise InputError(f"{path}: row {lineno}: {exc}") from None
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    if not points:
        raise InputError(f"{path}: no data rows")
    return points


def _check_nm(n, m):
    if n < 1:
        raise InputError(f"--n must be positive, got {n}")
    if not 0 <= m <= n:
        raise InputError(f"--m must satisfy 0 <= m <= n, got m={m}, n={n}")


def cmd_roc(args, out, err):
    _check_nm(args.n, args.m)
    curve = roc_curve(args.n, args.m, SignumVariant(args.variant))
    write_records(curve_records(curve, args.precision), args.format, out)
    return 0


def cmd_mroc(args, out, err):
    _check_nm(args.n, args.m)
    curve = mroc_curve(args.n, args.m, SignumVariant(args.variant))
    if curve.excluded:
        print("warning: m=0 is the undamaged-trace special case; p_CR is identically 1", file=err)
    write_records(curve_records(curve, args.precision, mroc=True), args.format, out)
    return 0


def cmd_overall(args, out, err):
    _check_nm(args.n, args.m)
    ov = overall_probabilities(args.n, args.m, SignumVariant(args.variant))
    rows = [
        {"quantity": name, "frac": frac_str(v), "value": decimal_str(v, args.precision)}
        for name, v in (("P_FR", ov.P_FR), ("P_CR", ov.P_CR))
    ]
    write_records(rows, args.format, out)
    return 0


def cmd_fit(args, out, err):
    points = read_empirical_csv(args.input)
    try:
        report = fit_curve(points, args.n, SignumVariant(args.variant), CurveMode(args.mode),
                           Fraction(args.tolerance))
    except UndeterminedError as exc:
        raise InputError(str(exc)) from None
    json.dump(report.to_dict(), out, indent=2)
    out.write("\n")
    return 0


def cmd_simulate(args, out, err):
    _check_nm(args.n, args.m)
    if args.trials < 1:
        raise InputError("--trials must be >= 1")
    est = montecarlo.estimate_roc(args.n, args.m, SignumVariant(args.variant), args.trials, args.seed)
    rows = [
        {
            "theta": e.theta,
            "f_hat": f"{e.F.p_hat:.{args.precision}f}",
            "f_stderr": f"{e.F.stderr:.{args.precision}f}",
            "p_hat": f"{e.P.p_hat:.{args.precision}f}",
            "p_stderr": f"{e.P.stderr:.{args.precision}f}",
        }
        for e in est
    ]
    write_records(rows, args.format, out)
    return 0


@dataclass
class VerifyConfig:
    n_max: int = 8
    trials: int = 10**5
    seed: int = 0
    sigmas: float = 5.0


def run_verify(cfg, out):
    """Analytic vs exhaustive enumeration on the full grid, then seeded simulation.

    Returns the first failing case as a dict, or None when everything agrees.
    The simulation check uses the standard error implied by the exact value,
    so an exact 0 or 1 must be hit exactly.
    """
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(["check", "N", "m", "theta", "variant", "expected", "observed", "ok"])
    for N in range(1, cfg.n_max + 1):
        for variant in SignumVariant:
            for m in range(N + 1):
                for theta in analytic.valid_theta_range(N, variant):
                    exact = analytic.recall_probability(m, N, theta, variant)
                    oracle = montecarlo.exhaustive_probability(N, m, theta, variant)
                    ok = exact == oracle
                    writer.writerow(["exhaustive", N, m, theta, variant.value,
                                     frac_str(exact), frac_str(oracle), ok])
                    if not ok:
                        return dict(check="exhaustive", N=N, m=m, theta=theta, variant=variant.value)
    if cfg.trials <= 0:
        return None
    for N in range(1, cfg.n_max + 1):
        for variant in SignumVariant:
            for m in range(N + 1):
                for est in montecarlo.estimate_roc(N, m, variant, cfg.trials, cfg.seed):
                    exact = analytic.recall_probability(m, N, est.theta, variant)
                    sigma = sqrt(float(exact * (1 - exact)) / cfg.trials)
                    ok = abs(est.P.p_hat - float(exact)) <= cfg.sigmas * sigma
                    writer.writerow(["simulate", N, m, est.theta, variant.value,
                                     frac_str(exact), f"{est.P.p_hat:.6f}", ok])
                    if not ok:
                        return dict(check="simulate", N=N, m=m, theta=est.theta, variant=variant.value)
    return None


def cmd_verify(args, out, err):
    if args.n_max < 1:
        raise InputError("--n-max must be positive")
    failure = run_verify(VerifyConfig(args.n_max, args.trials, args.seed), out)
    if failure:
        print("verification failed at " + ", ".join(f"{k}={v}" for k, v in failure.items()), file=err)
        return 1
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="hamroc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_m=True, with_format=True):
        p.add_argument("--n", type=int, default=DEFAULT_N, help="vector dimension N")
        if with_m:
            p.add_argument("--m", type=int, required=True, help="number of noise components")
        p.add_argument("--variant", choices=[v.value for v in SignumVariant], default="minus",
                       help="neuron output at h == theta")
        if with_format:
            p.add_argument("--format", choices=["csv", "json"], default="csv")
        p.add_argument("--precision", type=int, default=DEFAULT_PRECISION, help="decimal digits")

    p = sub.add_parser("roc", help="ROC operating points")
    common(p)
    p.set_defaults(func=cmd_roc)

    p = sub.add_parser("mroc", help="posterior correct-recall curve")
    common(p)
    p.set_defaults(func=cmd_mroc)

    p = sub.add_parser("overall", help="overall false/correct recall probabilities")
    common(p)
    p.set_defaults(func=cmd_overall)

    p = sub.add_parser("fit", help="bracket the cue index of empirical points")
    p.add_argument("--input", required=True, help="CSV with header f,p[,label]")
    p.add_argument("--mode", choices=[m.value for m in CurveMode], default="roc")
    p.add_argument("--tolerance", default="1e-9", help="on-curve tolerance in P")
    common(p, with_m=False, with_format=False)
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("simulate", help="Monte Carlo estimate of the ROC")
    common(p)
    p.add_argument("--trials", type=int, default=10**5)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="check analytic formulas against the oracles")
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--trials", type=int, default=10**5, help="0 skips the simulation checks")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    try:
        return args.func(args, out, err)
    except (InputError, ValueError) as exc:
        print(f"hamroc {args.command}: error: {exc}", file=err)
        return 2


if __name__ == "__main__":
    sys.exit(main())
