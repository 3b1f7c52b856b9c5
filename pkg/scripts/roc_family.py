"""ROC and mROC tables for every cue index on the q = j/N grid, written as CSV."""
import argparse
import csv
import sys

from hamroc import mroc_curve
from hamroc.cli import decimal_str


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--out", default="-")
    args = ap.parse_args()
    out = sys.stdout if args.out == "-" else open(args.out, "w", newline="")
    w = csv.writer(out, lineterminator="\n")
    w.writerow(["q", "theta", "f", "p", "pcr"])
    for m in range(args.n, -1, -1):
        q = f"{args.n - m}/{args.n}"
        for p in mroc_curve(args.n, m).points:
            w.writerow([q, p.theta, decimal_str(p.F, 6), decimal_str(p.P, 6), decimal_str(p.p_CR, 6)])


if __name__ == "__main__":
    main()
