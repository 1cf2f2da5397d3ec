from __future__ import annotations

import numpy as np
import pytest

from bmbound import (
    DegreeOutOfRange,
    InsufficientSieveBound,
    TwoPointDivisor,
    build_table,
    dual_dimension,
    goppa_bound,
    h_p1,
    h_q1,
    nu_p,
    nu_q,
    taumap_for,
)
from reference_tables import BM3_Q2_D, BM5_Q2_D


def test_goppa_bound_examples(p23, p25):
    assert goppa_bound(p23, 38) == 20
    assert goppa_bound(p23, 18) == 0
    assert goppa_bound(p23, 0) == -18  # unclamped
    assert goppa_bound(p25, 137) == 47


def test_nu_examples(p23):
    tm = taumap_for(p23)
    hq = h_q1(p23, 60)
    hp = h_p1(p23, 60)
    assert nu_q(0, 0, hq, tm) == 0
    assert nu_q(5, 0, hq, tm) == 2
    assert nu_q(20, 20, hq, tm) == 22
    assert nu_p(0, 0, hp, tm) == 0
    assert nu_p(0, 5, hp, tm) == 2
    assert nu_p(20, 20, hp, tm) == 22


def test_nu_input_validation(p23):
    tm = taumap_for(p23)
    hq = h_q1(p23, 60)
    hp = h_p1(p23, 60)
    with pytest.raises(ValueError):
        nu_q(-1, 0, hq, tm)
    with pytest.raises(ValueError):
        nu_p(0, -2, hp, tm)
    with pytest.raises(InsufficientSieveBound):
        nu_q(40, 20, hq, tm)


def test_nu_collapses_to_goppa_at_high_degree(p23):
    tm = taumap_for(p23)
    hq = h_q1(p23, 120)
    hp = h_p1(p23, 120)
    for delta in range(4 * p23.genus - 1, 4 * p23.genus + 6):
        for a in range(delta + 1):
            b = delta - a
            assert nu_q(a, b, hq, tm) == delta - 2 * p23.genus + 2
            assert nu_p(a, b, hp, tm) == delta - 2 * p23.genus + 2


def test_dual_dimension_examples(p23):
    tm = taumap_for(p23)
    assert dual_dimension(tm, TwoPointDivisor(0, 37)) == 195
    assert dual_dimension(tm, TwoPointDivisor(2, 5)) == 222
    assert dual_dimension(tm, TwoPointDivisor(0, 0)) == 222


def test_dual_dimension_rejects_degrees_outside_range(p23):
    tm = taumap_for(p23)
    with pytest.raises(DegreeOutOfRange):
        dual_dimension(tm, TwoPointDivisor(0, -1))
    with pytest.raises(DegreeOutOfRange):
        dual_dimension(tm, TwoPointDivisor(0, p23.delta_cap))


def test_matrix_outer_diagonal_and_goppa_dominance(all_params, tables):
    for params in all_params:
        mat, _ = tables[params]
        cap = mat.delta_cap
        g2 = 2 * params.genus
        for delta in range(cap + 1):
            a = np.arange(delta + 1)
            diag = mat.cells[a, delta - a]
            assert int(diag.min()) >= delta - g2 + 2, (params.q, params.n, delta)
        a = np.arange(cap + 1)
        assert (mat.cells[a, cap - a] == cap - g2 + 2).all()


def test_matrix_cell_accessor(p23, tables):
    mat, _ = tables[p23]
    assert mat.d(0, 0) == 2
    with pytest.raises(ValueError):
        mat.d(-1, 0)
    with pytest.raises(ValueError):
        mat.d(20, 20)  # degree 40 > cap 39


def test_table_dimensions_strictly_increasing(all_params, tables):
    for params in all_params:
        _, table = tables[params]
        dims = [e.dim for e in table.entries]
        assert dims == sorted(dims)
        assert len(dims) == len(set(dims))


def test_table_witnesses_recompute(all_params, tables):
    for params in all_params:
        mat, table = tables[params]
        for e in table.entries:
            assert mat.d(e.a, e.b) == e.d
            assert e.goppa == e.a + e.b - 2 * params.genus + 2
            tm = taumap_for(params)
            assert dual_dimension(tm, TwoPointDivisor(e.a, e.b)) == e.dim


def test_bm3_reference_dimensions(p23, tables):
    by = tables[p23][1].by_dim()
    for k, d in BM3_Q2_D.items():
        assert by[k].d == d, k


def test_bm5_reference_dimensions(p25, tables):
    by = tables[p25][1].by_dim()
    for k, d in BM5_Q2_D.items():
        assert by[k].d == d, k


def test_dimension_one_below_the_published_run(p23, tables):
    # The full run of dimensions starts one lower than the published
    # table; that row exists and carries the same bound as k=195.
    by = tables[p23][1].by_dim()
    e = by[194]
    assert (e.a, e.b, e.d, e.goppa) == (0, 38, 20, 20)


def test_extended_cap_agrees_and_collapses(all_params, tables, extended_tables):
    for params in all_params:
        mat, _ = tables[params]
        ext, _ = extended_tables[params]
        g2 = 2 * params.genus
        for delta in range(mat.delta_cap):
            a = np.arange(delta + 1)
            assert (ext.cells[a, delta - a] == mat.cells[a, delta - a]).all()
        for delta in range(params.delta_cap, ext.delta_cap + 1):
            a = np.arange(delta + 1)
            assert (ext.cells[a, delta - a] == delta - g2 + 2).all()


def test_truncated_cap_is_valid_but_never_stronger(p23, tables):
    mat, _ = tables[p23]
    trunc, _ = build_table(p23, delta_cap=20)
    g2 = 2 * p23.genus
    for delta in range(21):
        for a in range(delta + 1):
            b = delta - a
            assert trunc.cells[a, b] >= delta - g2 + 2
            assert trunc.cells[a, b] <= mat.cells[a, b]


def test_cap_validation(p23):
    with pytest.raises(ValueError):
        build_table(p23, delta_cap=-1)
    with pytest.raises(ValueError):
        build_table(p23, delta_cap=p23.n_points + p23.genus)


def test_build_is_deterministic(p23):
    mat1, tab1 = build_table(p23)
    mat2, tab2 = build_table(p23)
    assert (mat1.cells == mat2.cells).all()
    assert tab1.entries == tab2.entries
