"""Integer invariants of the Beelen-Montanucci curves BM_n.

For a prime power q and odd n >= 3, BM_n is a maximal curve over
GF(q^(2n)).  Everything this package computes (Weierstrass semigroups,
the two-point tau map, order-bound tables) is a function of a handful of
integers derived from (q, n); this module is the single source of truth
for them.  The curve itself is never represented.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EvenOrSmallN, NotPrimePower, ParamOverflow

INT64_MAX = 2**63 - 1


def is_prime_power(q: int) -> bool:
    """True iff q = p^e for a prime p and e >= 1.

    Trial division up to sqrt(q); q is tiny in practice.
    """
    if q < 2:
        return False
    n = q
    p = 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
        p += 1
    return True  # q is prime


@dataclass(frozen=True)
class CurveParams:
    """All derived integer invariants of BM_n for one (q, n).

    Immutable after construction; build via :func:`derive_params`.
    """

    q: int
    n: int
    m: int            # (q^n + 1) / (q + 1)
    big_m: int        # (m - 1) / (q^2 - q)
    genus: int
    n_points: int     # rational points of BM_n over GF(q^(2n))
    period: int       # q^n + 1, period of the two-point semigroup H(Q1, P1)
    delta_cap: int    # 4*genus - 1, degree above which the order bound is the Goppa bound
    code_length: int  # n_points - 2


def derive_params(q: int, n: int) -> CurveParams:
    """Derive and validate every invariant of BM_n for the pair (q, n).

    Raises NotPrimePower / EvenOrSmallN on invalid input, and ParamOverflow
    when the derived quantities (or the products downstream modules form
    from them: period*genus, delta_cap^2, n_points) exceed signed 64-bit
    range, which is the arithmetic envelope the rest of the package
    assumes.
    """
    if not is_prime_power(q):
        raise NotPrimePower(f"q must be a prime power >= 2, got {q}")
    if n < 3 or n % 2 == 0:
        raise EvenOrSmallN(f"n must be odd and >= 3, got {n}")

    period = q**n + 1
    # q + 1 divides q^n + 1 for odd n; q^2 - 1 divides q^(n-1) - 1 for even n - 1.
    assert period % (q + 1) == 0
    m = period // (q + 1)
    assert (m - 1) % (q * q - q) == 0
    big_m = (m - 1) // (q * q - q)

    genus2 = (q - 1) * (q ** (n + 1) + q**n - q * q)
    assert genus2 % 2 == 0 and genus2 > 0
    genus = genus2 // 2
    n_points = q ** (2 * n + 2) - q ** (n + 3) + q ** (n + 2) + 1
    delta_cap = 4 * genus - 1

    for value in (period * genus, delta_cap * delta_cap, n_points):
        if value > INT64_MAX:
            raise ParamOverflow(
                f"(q={q}, n={n}) exceeds the 64-bit envelope: {value} > {INT64_MAX}"
            )

    # Degrees below delta_cap stay well clear of the zero-dual-code regime.
    assert delta_cap < n_points + 2 * genus - 3

    return CurveParams(
        q=q,
        n=n,
        m=m,
        big_m=big_m,
        genus=genus,
        n_points=n_points,
        period=period,
        delta_cap=delta_cap,
        code_length=n_points - 2,
    )
