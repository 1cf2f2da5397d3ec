"""Derive the integer invariants of the Beelen-Montanucci curves BM_n.

For a prime power q and odd n >= 3, BM_n is a maximal curve over
GF(q^(2n)).  Everything downstream (semigroups, the tau map, the bound
tables) is a function of the handful of integers printed here.
"""

from __future__ import annotations

from bmbound import ParamOverflow, derive_params


def main() -> None:
    header = f"{'q':>3} {'n':>3} {'m':>6} {'M':>4} {'genus':>8} {'points':>12} {'length':>12}"
    print(header)
    print("-" * len(header))
    for q in (2, 3, 4, 5, 7, 8, 9):
        for n in (3, 5, 7):
            p = derive_params(q, n)
            print(
                f"{p.q:>3} {p.n:>3} {p.m:>6} {p.big_m:>4} "
                f"{p.genus:>8} {p.n_points:>12} {p.code_length:>12}"
            )

    print()
    p = derive_params(2, 5)
    print(f"BM_5 over GF(2^10) in detail: {p}")
    print(f"  period (pole order of x at Q1):  {p.period}")
    print(f"  bound table cap 4g - 1:          {p.delta_cap}")
    print(f"  rational points:                 {p.n_points}")
    print(f"  evaluation points N - 2:         {p.code_length}")

    # Inputs whose downstream arithmetic would leave int64 are refused.
    try:
        derive_params(2, 99)
    except ParamOverflow as exc:
        print(f"\nderive_params(2, 99) -> ParamOverflow: {exc}")


if __name__ == "__main__":
    main()
