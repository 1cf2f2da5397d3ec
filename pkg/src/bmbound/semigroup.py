"""Numerical semigroups by additive sieve, plus the two one-point
Weierstrass semigroups H(P1) and H(Q1) of BM_n.

A semigroup is stored as a boolean membership table on [0, bound].  This
is the right trade for this package: every downstream question (nu
counts, gap lists, conductor) is a window lookup, and the bounds we need
are a small multiple of the genus.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

import numpy as np

from .curve import CurveParams
from .errors import (
    EmptyGenerators,
    InsufficientSieveBound,
    NonCoprimeGenerators,
)


@dataclass(frozen=True, eq=False)
class NumericalSemigroup:
    """Membership table of a numerical semigroup on [0, bound]."""

    generators: tuple[int, ...]
    bound: int
    membership: np.ndarray = field(repr=False)

    def contains(self, x: int) -> bool:
        if x < 0:
            return False
        if x > self.bound:
            raise InsufficientSieveBound(
                f"membership of {x} not sieved (bound={self.bound})"
            )
        return bool(self.membership[x])

    def gaps(self) -> list[int]:
        """All gaps; valid because bound >= conductor is checked on build."""
        return [x for x in range(self.bound + 1) if not self.membership[x]]

    @property
    def gap_count(self) -> int:
        return int(self.bound + 1 - np.count_nonzero(self.membership))

    @property
    def multiplicity(self) -> int:
        return min(self.generators)

    def conductor(self) -> int:
        gaps = self.gaps()
        return 0 if not gaps else gaps[-1] + 1


def from_generators(generators: list[int] | tuple[int, ...], bound: int) -> NumericalSemigroup:
    """Sieve the semigroup generated by `generators` on [0, bound].

    The generators must be positive with gcd 1, and the bound must reach
    the conductor (checked via the Frobenius bound for the two smallest
    coprime generators when available, else by requiring a full run of
    multiplicity() consecutive members at the top of the table).
    """
    gens = sorted(set(int(g) for g in generators))
    if not gens:
        raise EmptyGenerators("need at least one generator")
    if gens[0] <= 0:
        raise EmptyGenerators(f"generators must be positive, got {gens[0]}")
    g = 0
    for x in gens:
        g = gcd(g, x)
    if g != 1:
        raise NonCoprimeGenerators(f"gcd of generators is {g}, not 1")

    member = np.zeros(bound + 1, dtype=bool)
    member[0] = True
    for gen in gens:
        if gen > bound:
            continue
        for x in range(gen, bound + 1):
            if member[x - gen]:
                member[x] = True

    # Conductor certainty: the largest gap of any coprime pair (a, b) is
    # ab - a - b, so a bound past that is definitely complete.  Otherwise
    # fall back to seeing multiplicity() consecutive members at the top.
    certain = any(
        gcd(a, b) == 1 and bound >= a * b - a - b
        for idx, a in enumerate(gens)
        for b in gens[idx + 1 :]
    )
    if not certain:
        run = gens[0]
        if bound + 1 < run or not member[bound - run + 1 :].all():
            raise InsufficientSieveBound(
                f"bound {bound} may not reach the conductor of {gens}"
            )

    return NumericalSemigroup(
        generators=tuple(gens), bound=bound, membership=member
    )


def p1_generators(params: CurveParams) -> list[int]:
    """Generators of H(P1): q^n + 1 and mq + k(q^2 - q) for k = 0..M."""
    q = params.q
    return [params.period] + [
        params.m * q + k * (q * q - q) for k in range(params.big_m + 1)
    ]


def q1_generators(params: CurveParams) -> list[int]:
    """Generators of H(Q1): q^n + 1 - m and q^n + 1 - k for k = 0..M."""
    return [params.period - params.m] + [
        params.period - k for k in range(params.big_m + 1)
    ]


def h_p1(params: CurveParams, bound: int) -> NumericalSemigroup:
    """Weierstrass semigroup of BM_n at the point P1, sieved to `bound`."""
    return from_generators(p1_generators(params), bound)


def h_q1(params: CurveParams, bound: int) -> NumericalSemigroup:
    """Weierstrass semigroup of BM_n at the point Q1, sieved to `bound`."""
    return from_generators(q1_generators(params), bound)
