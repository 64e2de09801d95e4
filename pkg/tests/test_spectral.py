import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from hypothesis.extra import numpy as hnp

from apnforge import _kernels
from apnforge.catalog import catalog
from apnforge.spectral import (
    apn_fourth_moment, autocorrelation, autocorrelation_spectrum, boolean_walsh, fourth_moment,
    fwht_in_place, is_ab, is_apn_spectral, parseval_holds, plateau_profile, power_moment,
    walsh_direct, walsh_spectrum,
)
from apnforge.vbf import BooleanFunc, component, from_inverse, identity, is_apn
from apnforge.field import FieldSpec

from helpers import cube, gold, hadamard, random_table


@pytest.mark.parametrize("n", range(0, 11))
def test_fwht_matches_dense_hadamard(n):
    rng = np.random.default_rng(n)
    x = rng.integers(-50, 50, 1 << n)
    expect = hadamard(n) @ x
    assert np.array_equal(fwht_in_place(x.copy()), expect)


def test_fwht_blocked_path_matches_serial():
    # above the kernel block size the parallel blocked path is taken
    rng = np.random.default_rng(1)
    x = rng.integers(-3, 4, 1 << 16)
    a, b = x.copy(), x.copy()
    _kernels.fwht(a)
    _kernels._fwht_serial(b)
    assert np.array_equal(a, b)


def test_fwht_axis0_transforms_columns():
    rng = np.random.default_rng(2)
    x = rng.integers(-9, 9, (32, 5))
    got = x.copy()
    _kernels.fwht_axis0(got)
    assert np.array_equal(got, hadamard(5) @ x)


@given(hnp.arrays(np.int64, st.sampled_from([1, 2, 8, 64, 256]), elements=st.integers(-1000, 1000)))
def test_fwht_involution(x):
    y = fwht_in_place(fwht_in_place(x.copy()))
    assert np.array_equal(y, x * x.size)


def test_fwht_input_validation():
    with pytest.raises(ValueError):
        fwht_in_place(np.zeros(6, dtype=np.int64))
    with pytest.raises(TypeError):
        fwht_in_place(np.zeros(4, dtype=np.float64))
    with pytest.raises(TypeError):
        fwht_in_place(np.zeros((2, 2), dtype=np.int64))
    with pytest.raises(OverflowError):
        fwht_in_place(np.full(4, 2**30, dtype=np.int32))


@pytest.mark.parametrize("n", [3, 4, 5])
def test_walsh_matches_direct_sum(n):
    F = random_table(np.random.default_rng(n), n)
    W = walsh_spectrum(F).values
    for u in range(F.size):
        for v in range(F.size):
            assert W[u, v] == walsh_direct(F, u, v)


def test_walsh_trivial_column():
    F = gold(5)
    W = walsh_spectrum(F).values
    assert W[0, 0] == 32 and np.all(W[1:, 0] == 0)


@pytest.mark.parametrize("F", [gold(3), gold(5), cube(7), from_inverse(FieldSpec.default(5))], ids=str)
def test_parseval(F):
    assert parseval_holds(walsh_spectrum(F))


@given(st.integers(1, 7), st.integers(0, 2**32 - 1))
def test_parseval_random(n, seed):
    F = random_table(np.random.default_rng(seed), n)
    assert parseval_holds(walsh_spectrum(F))


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_gold_is_ab(n):
    S = walsh_spectrum(gold(n))
    assert is_ab(S)
    prof = plateau_profile(S)
    assert prof.is_plateaued and prof.single_amplitude
    assert S.nonlinearity == (1 << (n - 1)) - (1 << ((n - 1) // 2))


def test_inverse_not_plateaued_and_not_ab():
    S = walsh_spectrum(from_inverse(FieldSpec.default(5)))
    assert not is_ab(S)
    assert not plateau_profile(S).is_plateaued


@pytest.mark.parametrize("n", [4, 6, 8])
def test_gold_even_bent_components(n):
    # x^3 with n even: v.x^3 is bent exactly when v is not a cube
    prof = plateau_profile(walsh_spectrum(gold(n)))
    assert prof.is_plateaued and not prof.single_amplitude
    assert len(prof.bent_components) == 2 * ((1 << n) - 1) // 3
    assert not is_ab(walsh_spectrum(gold(n)))


def test_identity_is_linear():
    S = walsh_spectrum(identity(4))
    assert S.linearity == 16 and S.nonlinearity == 0


def test_apn_fourth_moment_value():
    assert apn_fourth_moment(3) == 64 * (3 * 64 - 16)


@pytest.mark.parametrize("F", catalog(5) + catalog(6), ids=str)
def test_fourth_moment_on_catalog(F):
    S = walsh_spectrum(F)
    assert fourth_moment(S) == apn_fourth_moment(F.n)
    assert power_moment(S, 2) == 1 << (3 * F.n)


@given(st.integers(2, 6), st.integers(0, 2**32 - 1))
def test_spectral_and_differential_apn_agree(n, seed):
    F = random_table(np.random.default_rng(seed), n)
    assert is_apn_spectral(walsh_spectrum(F)) == is_apn(F)


def test_autocorrelation_transform_matches_direct():
    rng = np.random.default_rng(7)
    f = BooleanFunc.from_bits(rng.integers(0, 2, 64))
    spec = autocorrelation_spectrum(f)
    for s in range(64):
        assert spec[s] == autocorrelation(f, s)
    assert spec[0] == 64


def test_boolean_walsh_of_component_is_column():
    F = gold(5)
    W = walsh_spectrum(F)
    for v in (1, 7, 30):
        assert np.array_equal(boolean_walsh(component(F, v)), W.column(v))
