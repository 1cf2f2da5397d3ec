"""The tau map of the two-point Weierstrass semigroup H(Q1, P1) of BM_n.

For each integer i there is a smallest j such that some function on BM_n
has pole divisor profile (i at Q1, j at P1); that j is tau(i).  The pair
semigroup, every Riemann-Roch dimension dim L(a*Q1 + b*P1), and both
order bounds in :mod:`bmbound.bound` reduce to evaluations of tau and
its inverse, so this module is the computational core of the package.

tau has a closed form.  Write i = -k*period - ell*m - beta with
0 <= beta < m and 0 <= ell < q + 1 (Euclidean division, so k can be any
integer); then with gamma = ceil(beta / M),

    tau(i) = k*period + (gamma + ell)*m*q + beta*(q^2 - q).

tau is a bijection of Z with tau(i + period) = tau(i) - period, which is
what makes the inverse computable from a single period of lookups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .curve import INT64_MAX, CurveParams
from .errors import ParamOverflow


@dataclass(frozen=True)
class TauDecomposition:
    """Euclidean decomposition i = -k*period - ell*m - beta, plus
    gamma = ceil(beta / M)."""

    k: int
    ell: int
    beta: int
    gamma: int


@dataclass(frozen=True)
class TwoPointDivisor:
    """The divisor a*Q1 + b*P1."""

    a: int
    b: int

    @property
    def degree(self) -> int:
        return self.a + self.b


def _i_limit(params: CurveParams) -> int:
    # |tau(i)| <= |i| + period*(q+1)^2, so inputs within this limit keep
    # every intermediate product inside signed 64-bit range.
    return INT64_MAX - params.period * (params.q + 1) ** 2


def decompose(params: CurveParams, i: int) -> TauDecomposition:
    """Decompose i as -k*period - ell*m - beta (0 <= beta < m,
    0 <= ell < q+1)."""
    r = (-i) % params.period
    k = ((-i) - r) // params.period
    ell, beta = divmod(r, params.m)
    gamma = (beta + params.big_m - 1) // params.big_m
    return TauDecomposition(k=k, ell=ell, beta=beta, gamma=gamma)


def tau(params: CurveParams, i: int) -> int:
    """Smallest pole order at P1 among functions with pole order exactly
    i at Q1 (pole order -i at Q1 means a zero of order i there)."""
    if abs(i) > _i_limit(params):
        raise ParamOverflow(f"|i| = {abs(i)} exceeds the 64-bit envelope")
    d = decompose(params, i)
    q = params.q
    return (
        d.k * params.period
        + (d.gamma + d.ell) * params.m * q
        + d.beta * (q * q - q)
    )


def tau_range(params: CurveParams, lo: int, hi: int) -> np.ndarray:
    """tau evaluated on every integer in [lo, hi], as an int64 array."""
    if lo > hi:
        return np.empty(0, dtype=np.int64)
    if max(abs(lo), abs(hi)) > _i_limit(params):
        raise ParamOverflow(
            f"window [{lo}, {hi}] exceeds the 64-bit envelope"
        )
    q = params.q
    i = np.arange(lo, hi + 1, dtype=np.int64)
    t = -i
    r = t % params.period
    k = (t - r) // params.period
    ell, beta = np.divmod(r, params.m)
    gamma = (beta + params.big_m - 1) // params.big_m
    return k * params.period + (gamma + ell) * (params.m * q) + beta * (q * q - q)


@dataclass(frozen=True, eq=False)
class TauMap:
    """tau and its inverse for one curve, with the period-indexed lookup
    table that makes the inverse O(1).

    tau restricted to [0, period) hits every residue class mod period
    exactly once, so for any j the unique preimage is recovered from the
    representative with the same residue.  Build via :func:`taumap_for`
    (cached per params) or :func:`TauMap.build`.
    """

    params: CurveParams
    residue_index: np.ndarray = field(repr=False)  # residue of tau(i) -> i
    tau_of_index: np.ndarray = field(repr=False)   # tau on [0, period)

    @staticmethod
    def build(params: CurveParams) -> "TauMap":
        period = params.period
        tau0 = tau_range(params, 0, period - 1)
        residues = tau0 % period
        index = np.full(period, -1, dtype=np.int64)
        index[residues] = np.arange(period, dtype=np.int64)
        # Bijectivity of tau mod period is structural; a hole here means
        # the closed form itself is wrong.
        assert (index >= 0).all()
        return TauMap(params=params, residue_index=index, tau_of_index=tau0)

    def tau(self, i: int) -> int:
        return tau(self.params, i)

    def tau_inverse(self, j: int) -> int:
        """The unique i with tau(i) = j."""
        if abs(j) > _i_limit(self.params):
            raise ParamOverflow(f"|j| = {abs(j)} exceeds the 64-bit envelope")
        i0 = int(self.residue_index[j % self.params.period])
        return i0 - j + int(self.tau_of_index[i0])

    def tau_inverse_range(self, lo: int, hi: int) -> np.ndarray:
        """tau_inverse on every integer in [lo, hi], as an int64 array."""
        if lo > hi:
            return np.empty(0, dtype=np.int64)
        if max(abs(lo), abs(hi)) > _i_limit(self.params):
            raise ParamOverflow(
                f"window [{lo}, {hi}] exceeds the 64-bit envelope"
            )
        j = np.arange(lo, hi + 1, dtype=np.int64)
        i0 = self.residue_index[j % self.params.period]
        return i0 - j + self.tau_of_index[i0]

    def nongap_at_q(self, b: int, i: int) -> bool:
        """Is i a pole order at Q1 achievable with pole order <= b at P1
        (i.e. i in H(Q1; b*P1))?"""
        return self.tau(i) <= b

    def nongap_at_p(self, a: int, j: int) -> bool:
        """Is j a pole order at P1 achievable with pole order <= a at Q1
        (i.e. j in H(P1; a*Q1))?"""
        return self.tau_inverse(j) <= a

    def two_point_member(self, i: int, j: int) -> bool:
        """Is (i, j) in the two-point semigroup H(Q1, P1)?"""
        return self.tau(i) <= j and self.tau_inverse(j) <= i

    def dim_riemann_roch(self, div: TwoPointDivisor) -> int:
        """dim L(a*Q1 + b*P1) = #{i in [-b, a] : tau(i) <= b}."""
        a, b = div.a, div.b
        if a + b < 0:
            return 0
        return int(np.count_nonzero(tau_range(self.params, -b, a) <= b))

    def window_points(self, w: int) -> list[tuple[int, int]]:
        """All members (i, j) of H(Q1, P1) with -w < i, j < w (strict),
        in lexicographic order."""
        if w < 1:
            raise ValueError(f"window must be >= 1, got {w}")
        ti = tau_range(self.params, -w + 1, w - 1)
        tj = self.tau_inverse_range(-w + 1, w - 1)
        coords = np.arange(-w + 1, w, dtype=np.int64)
        mask = (ti[:, None] <= coords[None, :]) & (tj[None, :] <= coords[:, None])
        return [(int(coords[u]), int(coords[v])) for u, v in np.argwhere(mask)]


@lru_cache(maxsize=None)
def taumap_for(params: CurveParams) -> TauMap:
    """The TauMap of a curve, built once per distinct params."""
    return TauMap.build(params)


def tau_inverse(params: CurveParams, j: int) -> int:
    """The unique i with tau(i) = j."""
    return taumap_for(params).tau_inverse(j)


def nongap_at_q(params: CurveParams, b: int, i: int) -> bool:
    """Is i in H(Q1; b*P1)?"""
    return taumap_for(params).nongap_at_q(b, i)


def nongap_at_p(params: CurveParams, a: int, j: int) -> bool:
    """Is j in H(P1; a*Q1)?"""
    return taumap_for(params).nongap_at_p(a, j)


def two_point_member(params: CurveParams, i: int, j: int) -> bool:
    """Is (i, j) in the two-point semigroup H(Q1, P1)?"""
    return taumap_for(params).two_point_member(i, j)


def dim_riemann_roch(params: CurveParams, div: TwoPointDivisor) -> int:
    """dim L(a*Q1 + b*P1)."""
    return taumap_for(params).dim_riemann_roch(div)


def window_points(params: CurveParams, w: int) -> list[tuple[int, int]]:
    """All members (i, j) of H(Q1, P1) with -w < i, j < w."""
    return taumap_for(params).window_points(w)
