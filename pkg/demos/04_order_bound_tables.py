"""Order bounds for duals of two-point codes, per dual dimension.

build_table runs the order-bound recursion over every divisor
a*Q1 + b*P1 of degree below 4g - 1 and keeps, for each dual dimension
k, the best bound d with a witness pair (a, b).  The gain column shows
how far the order bound beats the Goppa bound d >= deg - 2g + 2
(floored at the trivial distance 1).
"""

from __future__ import annotations

from bmbound import build_table, derive_params, goppa_bound


def main() -> None:
    params = derive_params(2, 3)
    mat, table = build_table(params)
    print(f"BM_3, q = 2: length {params.code_length}, genus {params.genus}")
    print(f"{'k':>5} {'(a, b)':>10} {'d':>4} {'goppa':>6} {'gain':>5}")
    for e in table.entries:
        gain = e.d - max(e.goppa, 1)
        print(f"{e.dim:>5} {f'({e.a}, {e.b})':>10} {e.d:>4} {e.goppa:>6} {gain:>5}")

    # The full matrix is also available: d(a, b) for any a + b <= 4g - 1.
    print(f"\nmatrix corner d(0, 0) = {mat.d(0, 0)}, cap = {mat.delta_cap}")

    params = derive_params(2, 5)
    _, table = build_table(params)
    print(f"\nBM_5, q = 2: length {params.code_length}, genus {params.genus}")
    print("dimensions where the order bound clears Goppa by 3 or more:")
    for e in table.entries:
        if e.d - e.goppa >= 3:
            print(f"  k = {e.dim}: d = {e.d} at (a, b) = ({e.a}, {e.b}), goppa {e.goppa}")

    print(f"\ngoppa_bound(params, 100) = {goppa_bound(params, 100)}")


if __name__ == "__main__":
    main()
