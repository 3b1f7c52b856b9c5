"""Build a five-point synthetic ROC whose cue index shifts along the curve and fit it.

The three leftmost points sit between the q = 3/9 and 4/9 curves, the two
rightmost between 2/9 and 3/9. Writes the points as an `f,p,label` CSV that
the `hamroc fit` command accepts.
"""
import argparse
import json

from hamroc import CurveMode, EmpiricalPoint, SignumVariant, fit_curve, interpolate_curve, roc_curve

N = 9


def between(j, F):
    lo = interpolate_curve(N, N - j, SignumVariant.MINUS, CurveMode.ROC, F)
    hi = interpolate_curve(N, N - j - 1, SignumVariant.MINUS, CurveMode.ROC, F)
    return EmpiricalPoint(F, (lo + hi) / 2)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", help="write the points to this CSV")
    args = ap.parse_args()
    F = [p.F for p in roc_curve(N, 7).points]
    pts = [between(3, f) for f in F[:3]] + [between(2, f) for f in F[4:6]]
    if args.out:
        with open(args.out, "w") as fh:
            fh.write("f,p,label\n")
            for i, p in enumerate(pts):
                fh.write(f"{float(p.F):.10f},{float(p.P):.10f},point{i + 1}\n")
    print(json.dumps(fit_curve(pts, N).to_dict(), indent=2))


if __name__ == "__main__":
    main()
