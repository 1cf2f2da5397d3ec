"""The tau map encoding the two-point Weierstrass semigroup H(Q1, P1).

tau is a bijection of the integers: (i, j) lies in H(Q1, P1) exactly
when tau(i) <= j and tau^-1(j) <= i.  The script prints one period of
tau, checks the round trip, and renders the members inside an open
window as a scatter plot (tau_window.png in the working directory).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt

from bmbound import derive_params, tau, tau_inverse, window_points


def main() -> None:
    params = derive_params(2, 3)
    pi = params.period
    print(f"BM_3, q = 2: period {pi}, genus {params.genus}")

    print("\none period of tau (members of H(Q1, P1) start where tau(i) <= j):")
    for i in range(-pi + 1, 1):
        t = tau(params, i)
        print(f"  tau({i:>3}) = {t:>3}   tau_inverse({t:>3}) = {tau_inverse(params, t):>3}")

    # Periodicity: shifting the input by one period shifts the output by
    # minus one period, so the window scatter is a union of shifted copies.
    assert all(
        tau(params, i + pi) == tau(params, i) - pi for i in range(-50, 51)
    )

    w = 2 * pi
    pts = window_points(params, w)
    print(f"\n{len(pts)} members of H(Q1, P1) with |i|, |j| < {w}")

    fig, ax = plt.subplots(figsize=(5, 5))
    ax.scatter([i for i, _ in pts], [j for _, j in pts], s=12)
    ax.axhline(0, lw=0.5, color="gray")
    ax.axvline(0, lw=0.5, color="gray")
    ax.set_xlabel("i  (pole order at Q1)")
    ax.set_ylabel("j  (pole order at P1)")
    ax.set_title(f"H(Q1, P1) for BM_3, q=2, window {w}")
    fig.tight_layout()
    fig.savefig("tau_window.png", dpi=150)
    print("wrote tau_window.png")


if __name__ == "__main__":
    main()
