from __future__ import annotations

import pytest

from bmbound import (
    EvenOrSmallN,
    NotPrimePower,
    ParamOverflow,
    derive_params,
    is_prime_power,
)


def _naive_prime_powers(limit):
    def is_prime(p):
        return p >= 2 and all(p % d for d in range(2, p))

    out = set()
    for p in range(2, limit + 1):
        if not is_prime(p):
            continue
        v = p
        while v <= limit:
            out.add(v)
            v *= p
    return out


def test_is_prime_power_matches_naive_enumeration():
    powers = _naive_prime_powers(300)
    for q in range(0, 301):
        assert is_prime_power(q) == (q in powers), q


def test_known_invariants_bm3_q2():
    p = derive_params(2, 3)
    assert p.m == 3 and p.big_m == 1
    assert p.genus == 10 and p.n_points == 225
    assert p.period == 9 and p.delta_cap == 39
    assert p.code_length == 223


def test_known_invariants_bm5_q2():
    p = derive_params(2, 5)
    assert p.m == 11 and p.big_m == 5
    assert p.genus == 46 and p.n_points == 3969
    assert p.period == 33 and p.delta_cap == 183
    assert p.code_length == 3967


def test_known_invariants_bm3_q3():
    p = derive_params(3, 3)
    assert p.m == 7 and p.big_m == 1
    assert p.genus == 99 and p.n_points == 6076
    assert p.period == 28 and p.delta_cap == 395
    assert p.code_length == 6074


def test_internal_consistency_over_a_sweep():
    for q in (2, 3, 4, 5, 7, 8, 9):
        for n in (3, 5, 7):
            try:
                p = derive_params(q, n)
            except ParamOverflow:
                continue
            assert p.period == q**n + 1 == (q + 1) * p.m
            assert p.m - 1 == p.big_m * (q * q - q)
            assert 2 * p.genus == (q - 1) * (q ** (n + 1) + q**n - q * q)
            assert p.delta_cap == 4 * p.genus - 1
            assert p.code_length == p.n_points - 2
            # Degrees up to the cap never reach the zero-dual-code regime.
            assert p.delta_cap < p.n_points + 2 * p.genus - 3


def test_rejects_non_prime_power():
    for q in (0, 1, 6, 10, 12, 100):
        with pytest.raises(NotPrimePower):
            derive_params(q, 3)


def test_rejects_even_or_small_n():
    for n in (-1, 0, 1, 2, 4, 6):
        with pytest.raises(EvenOrSmallN):
            derive_params(2, n)


def test_rejects_parameter_overflow():
    with pytest.raises(ParamOverflow):
        derive_params(2, 99)
    with pytest.raises(ParamOverflow):
        derive_params(1024, 7)


def test_params_are_hashable_values():
    assert derive_params(2, 3) == derive_params(2, 3)
    assert len({derive_params(2, 3), derive_params(2, 3)}) == 1
