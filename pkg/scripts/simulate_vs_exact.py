"""Seeded Monte Carlo ROC next to the exact one, with z-scores per operating point."""
import argparse

from hamroc import roc_curve
from hamroc.montecarlo import estimate_roc


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=9)
    ap.add_argument("--m", type=int, default=7)
    ap.add_argument("--trials", type=int, default=10**6)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    exact = {p.theta: p for p in roc_curve(args.n, args.m).points}
    print("theta  F_exact   P_exact   P_hat     z")
    for e in estimate_roc(args.n, args.m, trials=args.trials, seed=args.seed):
        pt = exact[e.theta]
        z = (e.P.p_hat - float(pt.P)) / e.P.stderr if e.P.stderr else 0.0
        print(f"{e.theta:>5}  {float(pt.F):.6f}  {float(pt.P):.6f}  {e.P.p_hat:.6f}  {z:+.2f}")


if __name__ == "__main__":
    main()
