import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import ideal
from gradedred import module as gm
from gradedred import monomial as mon
from gradedred.errors import InputError, ZeroModuleError
from gradedred.generators import random_module
from gradedred.koszul import (
    BettiTable,
    betti_table,
    hilbert_series_numerator,
    koszul_homology_dim,
    regularity,
    subcomplex_exactness,
    taylor_bound,
)
from gradedred.monomial import MonomialIdeal


def modules():
    return st.integers(0, 2**32 - 1).map(lambda s: random_module(np.random.default_rng(s)))


def test_betti_examples():
    assert betti_table(gm.free(2)).nonzero() == {(0, 0): 1}
    assert betti_table(gm.cyclic(MonomialIdeal.maximal(2))).nonzero() == {(0, 0): 1, (1, 1): 2, (2, 2): 1}
    assert betti_table(gm.cyclic(mon.maximal_power(2, 2))).nonzero() == {(0, 0): 1, (1, 2): 3, (2, 3): 2}


def test_regularity_examples():
    assert regularity(gm.free(2)) == 0
    assert regularity(gm.cyclic(ideal((2, 0)))) == 1
    assert regularity(gm.cyclic(mon.maximal_power(2, 2))) == 1
    assert regularity(gm.ideal_module(mon.maximal_power(2, 3))) == 3
    with pytest.raises(ZeroModuleError):
        regularity(gm.cyclic(MonomialIdeal.unit(2)))


def test_betti_table_json():
    table = betti_table(gm.cyclic(ideal((2, 0))))
    assert table.to_json() == {"0,0": 1, "1,2": 1}
    assert table[5, 5] == 0
    empty = BettiTable()
    empty.add(0, 0, 0)
    assert empty.nonzero() == {}


def test_three_variable_koszul_resolution():
    K = gm.cyclic(MonomialIdeal.maximal(3))
    assert betti_table(K).nonzero() == {(0, 0): 1, (1, 1): 3, (2, 2): 3, (3, 3): 1}


@settings(max_examples=25, deadline=None)
@given(modules())
def test_multigraded_matches_singly_graded(M):
    B = betti_table(M)
    lo = min(c.shift for c in M.components)
    for i in range(M.nvars + 1):
        for j in range(lo, taylor_bound(M) + 2):
            assert B[i, j] == koszul_homology_dim(M, i, j), (i, j)


@settings(max_examples=60, deadline=None)
@given(modules())
def test_euler_characteristic(M):
    B = betti_table(M)
    lo = min(c.shift for c in M.components)
    for j in range(lo - 1, taylor_bound(M) + M.nvars + 2):
        assert B.euler(j) == hilbert_series_numerator(M, j)


@settings(max_examples=60, deadline=None)
@given(modules())
def test_zeroth_betti_counts_generators(M):
    B = betti_table(M)
    degs = gm.generator_degrees(M)
    for j in set(degs) | {j for (i, j) in B.nonzero() if i == 0}:
        assert B[0, j] == degs.count(j)


@settings(max_examples=40, deadline=None)
@given(modules(), modules(), st.integers(-2, 3))
def test_regularity_sum_and_shift(M, N, p):
    assert regularity(M.shift(p)) == regularity(M) + p
    if M.nvars == N.nvars:
        assert regularity(gm.direct_sum(M, N)) == max(regularity(M), regularity(N))


# -- the truncated Koszul subcomplex -----------------------------------------


def test_subcomplex_linear_case():
    m = MonomialIdeal.maximal(2)
    rep = subcomplex_exactness(m, gm.free(2), list(m.gens), 3, range(0, 9))
    assert rep.dd_zero
    assert rep.passed(3)
    assert {r.stage for r in rep.rows} == {0, 1, 2}
    assert {r.degree for r in rep.rows} == set(range(9))


def test_subcomplex_threshold_scan():
    I = ideal((2, 0), (0, 3))
    scan = list(range(2, 9))
    rep = subcomplex_exactness(I, gm.free(2), [(2, 0), (0, 3)], scan)
    assert rep.dd_zero
    assert rep.threshold is not None
    assert all(rep.passed(n) for n in scan if n >= rep.threshold)
    assert rep.tested_n() == scan


def test_subcomplex_threshold_above_minimum():
    # J = (x^3, y^3) reduces (x^3, x^2y, y^3) only from J I^2 = I^3 on
    I = ideal((3, 0), (2, 1), (0, 3))
    rep = subcomplex_exactness(I, gm.free(2), [(3, 0), (0, 3)], list(range(2, 7)))
    assert rep.threshold == 3
    assert not rep.passed(2)
    assert rep.dd_zero


def test_subcomplex_rejects_bad_generators():
    I = ideal((2, 0), (0, 3))
    with pytest.raises(InputError, match="not a reduction"):
        subcomplex_exactness(I, gm.free(2), [(2, 0)], 3)
    with pytest.raises(InputError, match="minimal"):
        subcomplex_exactness(I, gm.free(2), [(2, 0), (3, 0), (0, 3)], 3)
    with pytest.raises(InputError):
        subcomplex_exactness(I, gm.free(2), [(2, 0), (0, 3)], 1)


def test_subcomplex_csv_rows():
    m = MonomialIdeal.maximal(2)
    rep = subcomplex_exactness(m, gm.free(2), list(m.gens), 2, range(2, 4))
    assert rep.to_csv_rows()[0] == "2,2,0,1"
    assert len(rep.to_csv_rows()) == 2 * 3
