"""Order bounds on the minimum distance of duals of two-point AG codes
on BM_n.

For the code C(a, b) obtained by evaluating L(a*Q1 + b*P1) at the other
rational points of the curve, the dual minimum distance satisfies a
recursive bound: enlarging the divisor by one point either leaves the
dual code unchanged (when the new degree is a gap) or shrinks it, and in
the second case any word lost is caught by a pair-counting quantity nu.
Running the recursion from the Goppa bound at degree delta_cap = 4g - 1
down to degree 0, and keeping the better of the Q1 and P1 directions at
every cell, yields the full triangular matrix of bounds in one pass.

Everything is expressed through the tau map, so a whole anti-diagonal of
the matrix is computed with a few vectorized window operations.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view

from .curve import CurveParams
from .errors import DegreeOutOfRange, InsufficientSieveBound
from .semigroup import NumericalSemigroup, h_p1, h_q1
from .tau import TauMap, TwoPointDivisor, tau_range, taumap_for


def goppa_bound(params: CurveParams, delta: int) -> int:
    """Goppa bound delta - 2g + 2 on the dual of a degree-delta code."""
    return delta - 2 * params.genus + 2


def nu_q(a: int, b: int, hq: NumericalSemigroup, taumap: TauMap) -> int:
    """#{i in [0, a+b+1] : i in H(Q1) and tau(a+1-i) <= b}.

    Counts the ways a+1 extra pole order at Q1 splits into a pair of
    achievable profiles; it lower-bounds the weight of any word the dual
    code loses when the divisor grows from (a, b) to (a+1, b).
    """
    if a < 0 or b < 0:
        raise ValueError(f"need a, b >= 0, got ({a}, {b})")
    top = a + b + 1
    if hq.bound < top:
        raise InsufficientSieveBound(
            f"H(Q1) sieved to {hq.bound}, need {top}"
        )
    tv = tau_range(taumap.params, -b, a + 1)[::-1]  # tau(a+1-i), i ascending
    return int(np.count_nonzero(hq.membership[: top + 1] & (tv <= b)))


def nu_p(a: int, b: int, hp: NumericalSemigroup, taumap: TauMap) -> int:
    """#{j in [0, a+b+1] : j in H(P1) and tau_inverse(b+1-j) <= a}.

    Mirror of :func:`nu_q` for growth in the P1 direction.
    """
    if a < 0 or b < 0:
        raise ValueError(f"need a, b >= 0, got ({a}, {b})")
    top = a + b + 1
    if hp.bound < top:
        raise InsufficientSieveBound(
            f"H(P1) sieved to {hp.bound}, need {top}"
        )
    tv = taumap.tau_inverse_range(-a, b + 1)[::-1]  # tau_inverse(b+1-j)
    return int(np.count_nonzero(hp.membership[: top + 1] & (tv <= a)))


def dual_dimension(taumap: TauMap, div: TwoPointDivisor) -> int:
    """Dimension of the dual of C(a, b): code length minus dim L(a*Q1 + b*P1)."""
    params = taumap.params
    if not 0 <= div.degree < params.delta_cap:
        raise DegreeOutOfRange(
            f"degree {div.degree} outside [0, {params.delta_cap})"
        )
    return params.code_length - taumap.dim_riemann_roch(div)


@dataclass(frozen=True, eq=False)
class BoundMatrix:
    """Dense triangular matrix of order bounds; cells[a, b] is the bound
    for the dual of C(a, b), valid for a, b >= 0 with a + b <= delta_cap."""

    delta_cap: int
    cells: np.ndarray = field(repr=False)

    def d(self, a: int, b: int) -> int:
        if a < 0 or b < 0 or a + b > self.delta_cap:
            raise ValueError(f"({a}, {b}) outside the computed triangle")
        return int(self.cells[a, b])


@dataclass(frozen=True)
class BoundEntry:
    """Best bound found for one dual dimension, with a witness divisor."""

    dim: int    # dimension of the dual code
    a: int
    b: int
    d: int      # order bound at the witness (a, b)
    goppa: int  # Goppa bound at the same degree, for comparison


@dataclass(frozen=True)
class BoundTable:
    """Per-dimension summary of a bound matrix, ascending in dim."""

    params: CurveParams
    entries: tuple[BoundEntry, ...]

    def by_dim(self) -> dict[int, BoundEntry]:
        return {e.dim: e for e in self.entries}


def build_table(
    params: CurveParams, delta_cap: int | None = None
) -> tuple[BoundMatrix, BoundTable]:
    """Compute the full order-bound matrix and its per-dimension table.

    The matrix covers all (a, b) with a + b <= delta_cap.  The default
    cap 4g - 1 is where the order bound provably settles on the Goppa
    bound, so raising it changes nothing; lowering it truncates the
    recursion and can only weaken the bounds (still valid, useful for
    quick runs).  For each dual dimension the table keeps the first cell
    attaining the largest bound, scanning degrees downward and a upward.
    """
    cap = params.delta_cap if delta_cap is None else delta_cap
    if cap < 0:
        raise ValueError(f"delta_cap must be >= 0, got {cap}")
    if cap > params.n_points + params.genus - 3:
        raise ValueError(f"delta_cap {cap} exceeds usable divisor degrees")

    g2 = 2 * params.genus
    taumap = taumap_for(params)
    off = cap + 2
    tau_vals = tau_range(params, -off, off)           # index off + x -> tau(x)
    tinv_vals = taumap.tau_inverse_range(-off, off)
    # Sieve past conductor + multiplicity so completeness is certain even
    # for truncated caps; the windows below only read [0, cap + 1].
    sieve_bound = max(off, 2 * params.genus + params.period)
    hq_mask = h_q1(params, sieve_bound).membership
    hp_mask = h_p1(params, sieve_bound).membership

    cells = np.zeros((cap + 1, cap + 1), dtype=np.int64)
    idx = np.arange(cap + 1)
    cells[idx, cap - idx] = cap - g2 + 2  # Goppa seed on the outer diagonal

    entries: dict[int, BoundEntry] = {}
    for delta in range(cap - 1, -1, -1):
        a = np.arange(delta + 1)
        b = delta - a
        win = delta + 2

        # Row r of each view is the length-(delta+2) window needed at
        # a = r, reversed so column i matches the summation index i.
        view_q = sliding_window_view(tau_vals, win)[off - delta : off + 1]
        nu_qv = ((view_q[:, ::-1] <= b[:, None]) & hq_mask[None, :win]).sum(axis=1)
        view_p = sliding_window_view(tinv_vals, win)[off - delta : off + 1][::-1]
        nu_pv = ((view_p[:, ::-1] <= a[:, None]) & hp_mask[None, :win]).sum(axis=1)

        # Growing a: on a gap of H(Q1; b*P1) the dual code is unchanged,
        # otherwise nu_q catches the words the larger code loses.
        inherit_q = cells[a + 1, b]
        cond_q = tau_vals[off + 1 : off + delta + 2] <= b
        d_q = np.where(cond_q, np.minimum(nu_qv, inherit_q), inherit_q)

        inherit_p = cells[a, b + 1]
        cond_p = tinv_vals[off + 1 : off + delta + 2][::-1] <= a
        d_p = np.where(cond_p, np.minimum(nu_pv, inherit_p), inherit_p)

        d_vec = np.maximum(d_q, d_p)
        cells[a, b] = d_vec

        dims = (
            sliding_window_view(tau_vals, delta + 1)[off - delta : off + 1]
            <= b[:, None]
        ).sum(axis=1)
        goppa = delta - g2 + 2
        for r in range(delta + 1):
            k = int(params.code_length - dims[r])
            d = int(d_vec[r])
            cur = entries.get(k)
            if cur is None or d > cur.d:
                entries[k] = BoundEntry(
                    dim=k, a=int(a[r]), b=int(b[r]), d=d, goppa=goppa
                )

    table = BoundTable(
        params=params,
        entries=tuple(entries[k] for k in sorted(entries)),
    )
    return BoundMatrix(delta_cap=cap, cells=cells), table
