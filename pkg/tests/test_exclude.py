import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from apnforge.catalog import catalog
from apnforge.exclude import (
    ON_GRAPH, NotAPNError, SidonSet, cube_transform, distance_lower_bound_from_spectrum,
    exclude_mult_oracle, exclude_spectrum_fast, exclude_table_oracle, is_maximal_sidon,
    oracle_spectrum, pi_invariant, pi_invariant_direct, triple_count, verify_sidon,
)
from apnforge.field import FieldSpec
from apnforge.vbf import VectorialFunc, from_inverse, from_monomial, graph_points, identity, is_apn

from helpers import cube, gold

F8 = FieldSpec.default(3)


def test_n3_cube_exhaustive_by_hand():
    # graph of x^3 over F_8 has C(8,3) = 56 triples spread over 56 off-graph points
    spec = exclude_spectrum_fast(cube(3))
    assert spec.histogram == {1: 56}
    assert spec.e_min == 1 == spec.e_max
    assert spec.total == triple_count(3) == 56


def test_on_graph_sentinel():
    F = gold(4)
    spec = exclude_spectrum_fast(F)
    for x in range(16):
        assert spec.at(x, int(F[x])) == ON_GRAPH
    assert np.count_nonzero(spec.mult == ON_GRAPH) == 16


def test_gold4_histogram():
    spec = exclude_spectrum_fast(gold(4))
    assert spec.histogram == {1: 80, 3: 160}
    assert oracle_spectrum(gold(4)).histogram == spec.histogram


def test_cube_transform_on_graph_value():
    F = gold(5)
    C = cube_transform(F)
    n = 5
    on = C[np.arange(32), F.table]
    assert np.all(on == (1 << (2 * n)) * (3 * (1 << n) - 2))
    assert np.all(np.delete(C.ravel(), graph_points(F)) % (6 << (2 * n)) == 0)


@pytest.mark.parametrize("F", catalog(3) + catalog(4) + catalog(5) + catalog(6), ids=str)
def test_fast_equals_triple_sweep(F):
    fast, slow = exclude_spectrum_fast(F), oracle_spectrum(F)
    assert np.array_equal(fast.mult, slow.mult)
    assert fast.histogram == slow.histogram


@pytest.mark.parametrize("F", catalog(5) + catalog(6), ids=str)
def test_total_counts_all_triples(F):
    assert exclude_spectrum_fast(F).total == math.comb(F.size, 3)


@pytest.mark.parametrize("F", [gold(7), from_inverse(FieldSpec.default(7)), gold(8)], ids=str)
def test_pair_oracle_on_random_points(F):
    S = SidonSet.of_graph(F)
    spec = exclude_spectrum_fast(F)
    rng = np.random.default_rng(F.n)
    checked = 0
    while checked < 200:
        a, b = rng.integers(0, F.size, 2).tolist()
        if F[a] == b:
            continue
        assert spec.at(a, b) == exclude_mult_oracle(S, (a << F.n) | b)
        checked += 1


@pytest.mark.parametrize("F", [gold(7), from_inverse(FieldSpec.default(9)), gold(10)], ids=str)
def test_streamed_histogram_matches_full(F):
    full = exclude_spectrum_fast(F)
    for split in (1, 3):
        assert exclude_spectrum_fast(F, histogram_only=True, split=split).histogram == full.histogram
    streamed = exclude_spectrum_fast(F, histogram_only=True)
    assert streamed.mult is None and streamed.e_min == full.e_min
    with pytest.raises(ValueError):
        streamed.at(0, 1)


def test_streamed_split_range():
    with pytest.raises(ValueError):
        exclude_spectrum_fast(gold(3), histogram_only=True, split=4)


def test_translation_shifts_spectrum():
    F = gold(5)
    G = F.with_table(F.table ^ 9)
    mf, mg = exclude_spectrum_fast(F).mult, exclude_spectrum_fast(G).mult
    # the graph of F + c is the graph of F shifted by (0, c); triples shift by (0, 3c) = (0, c)
    assert np.array_equal(mg, mf[:, np.arange(32) ^ 9])


def test_non_apn_rejected():
    with pytest.raises(NotAPNError):
        exclude_spectrum_fast(identity(4))
    assert not is_maximal_sidon(identity(4))


def test_sidon_checks():
    assert verify_sidon(SidonSet.of_graph(gold(4)))
    assert not verify_sidon(SidonSet(4, frozenset({0, 1, 2, 3})))
    with pytest.raises(ValueError):
        SidonSet(3, frozenset({8}))
    with pytest.raises(ValueError):
        exclude_mult_oracle(SidonSet.of_graph(gold(3)), 0)


def test_maximality_both_routes():
    for F in catalog(5):
        assert is_maximal_sidon(F)
        assert is_maximal_sidon(SidonSet.of_graph(F))
    # a small Sidon set that is not maximal
    assert not is_maximal_sidon(SidonSet(4, frozenset({0, 1, 2})))


def test_table_oracle_small_set_by_hand():
    tab = exclude_table_oracle(SidonSet(3, frozenset({0, 1, 2, 4})))
    # triples: 0+1+2=3, 0+1+4=5, 0+2+4=6, 1+2+4=7
    assert tab.tolist() == [ON_GRAPH, ON_GRAPH, ON_GRAPH, 1, ON_GRAPH, 1, 1, 1]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_random_apn_translates_and_shuffles(seed):
    # compose a catalog function with random affine permutations of the input
    rng = np.random.default_rng(seed)
    F = gold(5)
    perm = rng.permutation(5)
    shift = int(rng.integers(0, 32))
    xs = np.arange(32)
    xin = np.zeros(32, dtype=np.int64)
    for i, p in enumerate(perm):
        xin |= ((xs >> i) & 1) << p
    G = F.with_table(F.table[xin ^ shift])
    fast, slow = exclude_spectrum_fast(G), oracle_spectrum(G)
    assert np.array_equal(fast.mult, slow.mult)


@pytest.mark.parametrize("F", [gold(4), cube(5), from_inverse(F8)], ids=str)
def test_pi_invariant_two_routes(F):
    assert pi_invariant(F) == pi_invariant_direct(F)


def test_pi_minimum_and_distance_bound():
    F = from_inverse(FieldSpec.default(5))
    inv = pi_invariant(F)
    e_min = exclude_spectrum_fast(F).e_min
    assert inv.m_F == 3 * e_min
    assert distance_lower_bound_from_spectrum(F) == e_min + 1 == 4


def test_distance_bound_is_attained_for_n3():
    # x^3 and x^5 over F_8 are both APN; e_min + 1 = 2 bounds their distance 6
    F, G = from_monomial(F8, 3), from_monomial(F8, 5)
    assert distance_lower_bound_from_spectrum(F) == 2
    assert int(np.count_nonzero(F.table != G.table)) == 6


@pytest.mark.parametrize("n", [3, 5, 7])
def test_single_point_change_never_apn(n):
    # changing one value of an APN F always breaks APN-ness, as e_min >= 1
    F = cube(n)
    rng = np.random.default_rng(n)
    for _ in range(20):
        x, y = rng.integers(0, F.size, 2).tolist()
        if y == F[x]:
            continue
        t = F.table.copy()
        t[x] = y
        assert not is_apn(VectorialFunc(n, t))
