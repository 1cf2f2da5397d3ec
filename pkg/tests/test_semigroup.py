from __future__ import annotations

import pytest

from bmbound import (
    EmptyGenerators,
    InsufficientSieveBound,
    NonCoprimeGenerators,
    from_generators,
    h_p1,
    h_q1,
    p1_generators,
    q1_generators,
)


def _combination_members(gens, bound):
    # Independent route: fold in one generator at a time with every
    # multiplicity, instead of the element-by-element sieve.
    sums = {0}
    for g in gens:
        sums = {s + k * g for s in sums for k in range((bound - s) // g + 1)}
    return sums


def test_sieve_matches_combination_enumeration():
    for gens, bound in (
        ((6, 8, 9), 200),
        ((3, 5), 60),
        ((4, 6, 9), 120),
        ((5, 7, 11), 100),
        ((1,), 10),
    ):
        sg = from_generators(gens, bound)
        expected = _combination_members(gens, bound)
        for x in range(bound + 1):
            assert sg.contains(x) == (x in expected), (gens, x)


def test_gap_structure_of_6_8_9():
    sg = from_generators((6, 8, 9), 40)
    assert sg.gaps() == [1, 2, 3, 4, 5, 7, 10, 11, 13, 19]
    assert sg.gap_count == 10
    assert sg.conductor() == 20
    assert sg.multiplicity == 6
    assert not sg.contains(7)
    assert sg.contains(14)
    assert not sg.contains(-1)


def test_contains_beyond_bound_refuses_to_guess():
    sg = from_generators((6, 8, 9), 40)
    with pytest.raises(InsufficientSieveBound):
        sg.contains(41)


def test_generated_by_one_is_all_naturals():
    sg = from_generators((1,), 10)
    assert all(sg.contains(x) for x in range(11))
    assert sg.gaps() == []
    assert sg.conductor() == 0


def test_rejects_bad_generator_sets():
    with pytest.raises(EmptyGenerators):
        from_generators((), 10)
    with pytest.raises(EmptyGenerators):
        from_generators((0, 3), 10)
    with pytest.raises(EmptyGenerators):
        from_generators((-2, 3), 10)
    with pytest.raises(NonCoprimeGenerators):
        from_generators((4, 6), 50)
    with pytest.raises(NonCoprimeGenerators):
        from_generators((2,), 50)


def test_rejects_bound_that_may_miss_the_conductor():
    with pytest.raises(InsufficientSieveBound):
        from_generators((6, 8, 9), 10)


def test_generator_sets_of_the_test_curves(all_params):
    p23, p25, p33 = all_params
    assert sorted(p1_generators(p23)) == [6, 8, 9]
    assert sorted(q1_generators(p23)) == [6, 8, 9]
    assert sorted(p1_generators(p25)) == [22, 24, 26, 28, 30, 32, 33]
    assert sorted(q1_generators(p25)) == [22, 28, 29, 30, 31, 32, 33]
    assert sorted(p1_generators(p33)) == [21, 27, 28]
    assert sorted(q1_generators(p33)) == [21, 27, 28]


def test_smallest_nonzero_element_at_q1(all_params):
    for params in all_params:
        sg = h_q1(params, 2 * params.genus + params.period)
        assert sg.multiplicity == params.period - params.m


def test_gap_count_equals_curve_genus(all_params):
    for params in all_params:
        bound = 2 * params.genus + params.period
        assert h_p1(params, bound).gap_count == params.genus
        assert h_q1(params, bound).gap_count == params.genus


def test_conductor_within_two_genus(all_params):
    for params in all_params:
        bound = 2 * params.genus + params.period
        assert h_p1(params, bound).conductor() <= 2 * params.genus
        assert h_q1(params, bound).conductor() <= 2 * params.genus
