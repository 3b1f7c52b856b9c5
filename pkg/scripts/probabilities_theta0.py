"""Recall probability at theta = 0 vs damage degree for N = 9 and N = 8 (both tie rules)."""
from hamroc import SignumVariant, recall_probability
from hamroc.cli import decimal_str


def main():
    print("N  m   d      MINUS              PLUS")
    for N in (9, 8):
        for m in range(N + 1):
            lo = recall_probability(m, N, 0, SignumVariant.MINUS)
            hi = recall_probability(m, N, 0, SignumVariant.PLUS)
            print(f"{N}  {m:<2}  {m / N:.3f}  {str(lo):>8} {decimal_str(lo, 4)}  {str(hi):>8} {decimal_str(hi, 4)}")


if __name__ == "__main__":
    main()
