"""Independent certification of the closed-form tau map.

BM_n carries explicit functions with known pole behaviour at the pair
(Q1, P1): a unit alpha with valuation pair (-period, period), a function
with pair (-m, m*q), and for t = 1..M one with pair (-t, m*q + t*(q^2 - q)).
Monomials in these realize every tau value, so minimizing the P1 pole
order over monomials with a prescribed Q1 pole order recomputes tau from
scratch, sharing no code with the closed form.  The exponent ranges used
here are twice what realization needs, so the minimum cannot be missed.

A second, cheaper certificate is the exact identity
sum_{i=0}^{period-1} (i + tau(i)) = period * genus, which holds because
i + tau(i) enumerates the gap structure of the curve once per period.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .curve import CurveParams
from .errors import WindowTooLarge
from .tau import tau, tau_range

# Above this period the monomial envelope is too large to enumerate;
# certify_tau then relies on the sum identity alone.
ORACLE_PERIOD_LIMIT = 256


@dataclass(frozen=True)
class ValuationPair:
    """(pole order at Q1, pole order at P1) of a function; negative
    means a zero of that order."""

    i: int
    j: int


def generator_pairs(params: CurveParams) -> list[ValuationPair]:
    """Valuation pairs of the explicit functions: both pairs
    (period, -period) and (-period, period) from the unit alpha and its
    inverse, (-m, m*q), and (-t, m*q + t*(q^2 - q)) for t = 1..M."""
    q, m = params.q, params.m
    pairs = [
        ValuationPair(params.period, -params.period),
        ValuationPair(-params.period, params.period),
        ValuationPair(-m, m * q),
    ]
    pairs += [
        ValuationPair(-t, m * q + t * (q * q - q))
        for t in range(1, params.big_m + 1)
    ]
    return pairs


def _pole_profiles(params: CurveParams) -> list[tuple[int, int]]:
    """All (s, c) with s = sum(t * e_t), c = sum(e_t) over exponent
    vectors e_1..e_M >= 0 with s <= 2m.

    c parts from {1..M} sum to s exactly when c <= s <= c*M, so the
    profiles enumerate without building the vectors.
    """
    smax = 2 * params.m
    out = [(0, 0)]
    for c in range(1, smax + 1):
        out += [(s, c) for s in range(c, min(smax, c * params.big_m) + 1)]
    return out


def tau_envelope(params: CurveParams, window: int) -> dict[int, int]:
    """For each i in [-window, window], the least P1 pole order among
    monomials in the explicit functions with Q1 pole order exactly i.

    Each monomial alpha^k * (theta_0)^ell * prod theta_t^(e_t) has
    i = -k*period - ell*m - s and j = k*period + (ell + c)*m*q + s*(q^2 - q)
    with s, c as in :func:`_pole_profiles`; k is solved exactly from i,
    so only ell and the profile are enumerated.
    """
    if window < 1:
        raise ValueError(f"window must be >= 1, got {window}")
    if window > params.period:
        raise WindowTooLarge(
            f"envelope window {window} exceeds one period {params.period}"
        )
    q, m, period = params.q, params.m, params.period
    mq = m * q
    qq = q * q - q
    profiles = _pole_profiles(params)
    env: dict[int, int] = {}
    for i in range(-window, window + 1):
        best: int | None = None
        for ell in range(2 * (q + 1) + 1):
            base = -i - ell * m
            for s, c in profiles:
                t = base - s
                if t % period:
                    continue
                j = t + (ell + c) * mq + s * qq
                if best is None or j < best:
                    best = j
        assert best is not None  # ell, s from the Euclidean split always hit
        env[i] = best
    return env


def tau_mismatches(
    params: CurveParams, window: int
) -> list[tuple[int, int, int]]:
    """All (i, envelope j, closed-form j) where the two disagree on
    [-window, window]."""
    env = tau_envelope(params, window)
    out = []
    for i in range(-window, window + 1):
        t = tau(params, i)
        if env[i] != t:
            out.append((i, env[i], t))
    return out


@dataclass(frozen=True)
class TauCertificate:
    """Outcome of certifying the closed-form tau for one curve."""

    params: CurveParams
    sum_identity_ok: bool
    envelope_window: int | None  # None when the envelope was skipped
    mismatches: tuple[tuple[int, int, int], ...]

    @property
    def ok(self) -> bool:
        return self.sum_identity_ok and not self.mismatches


def tau_certificate(params: CurveParams) -> TauCertificate:
    """Check the sum identity over i in [-period+1, 0], plus the full
    monomial envelope over one period when it is small enough to
    enumerate."""
    period = params.period
    tv = tau_range(params, -period + 1, 0)
    total = int((tv + np.arange(-period + 1, 1, dtype=np.int64)).sum())
    sum_ok = total == period * params.genus
    if period <= ORACLE_PERIOD_LIMIT:
        window = period
        mismatches = tuple(tau_mismatches(params, window))
    else:
        window = None
        mismatches = ()
    return TauCertificate(
        params=params,
        sum_identity_ok=sum_ok,
        envelope_window=window,
        mismatches=mismatches,
    )


def certify_tau(params: CurveParams) -> bool:
    """True iff the closed-form tau passes :func:`tau_certificate`."""
    return tau_certificate(params).ok
