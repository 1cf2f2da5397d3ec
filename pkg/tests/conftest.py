from __future__ import annotations

import pytest

from bmbound import build_table, derive_params

# The three curves small enough to certify and tabulate exhaustively.
TEST_QN = ((2, 3), (2, 5), (3, 3))


@pytest.fixture(scope="session")
def p23():
    return derive_params(2, 3)


@pytest.fixture(scope="session")
def p25():
    return derive_params(2, 5)


@pytest.fixture(scope="session")
def p33():
    return derive_params(3, 3)


@pytest.fixture(scope="session")
def all_params(p23, p25, p33):
    return (p23, p25, p33)


@pytest.fixture(scope="session")
def tables(all_params):
    """Default-cap (matrix, table) pair per curve, built once."""
    return {params: build_table(params) for params in all_params}


@pytest.fixture(scope="session")
def extended_tables(all_params):
    """Same, with the cap pushed 20 past 4g - 1."""
    return {
        params: build_table(params, delta_cap=params.delta_cap + 20)
        for params in all_params
    }
