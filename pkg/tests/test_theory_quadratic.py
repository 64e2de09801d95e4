"""Ortho-derivatives, 3-to-1 difference sets and the gamma_F autocorrelation."""

import numpy as np
import pytest

from apnforge.catalog import Family, FamilySpec, blep_fixture, build, catalog
from apnforge.exclude import exclude_spectrum_fast
from apnforge.field import FieldSpec
from apnforge.theory.gamma import (
    derivative_weights_on_b_axis, gamma_autocorrelation, gamma_linear_structures,
    gamma_weight_divisibility, max_mult_criterion, mult_from_autocorrelation,
)
from apnforge.theory.ortho import component_weight_bound, mult_from_ortho, ortho_derivative
from apnforge.theory.triplicate import (
    alpha, beta, check_pds, difference_counts, is_pds, pds_params, three_to_one_bound,
)
from apnforge.spectral import autocorrelation, plateau_profile, walsh_spectrum
from apnforge.vbf import VectorialFunc, from_inverse, gamma_function, is_apn, is_quadratic

from helpers import cube, gold


def _plateaued(F):
    return plateau_profile(walsh_spectrum(F)).is_plateaued


# ---- alpha, beta and the difference-set parameters


def test_alpha_beta_values():
    assert [(alpha(n), beta(n)) for n in (4, 6, 8)] == [(1, 3), (13, 9), (37, 45)]


@pytest.mark.parametrize("n", [4, 6, 8, 10, 12])
def test_three_to_one_bound_closed_form(n):
    assert three_to_one_bound(n) == min(alpha(n), beta(n)) + 1


@pytest.mark.parametrize("n", [4, 6, 8, 10])
def test_pds_parameters_are_consistent(n):
    p = pds_params(n)
    # k(k - 1) = k lam + (v - 1 - k) mu for any partial difference set
    assert p.k * (p.k - 1) == p.k * p.lam + (p.v - 1 - p.k) * p.mu
    assert p.alpha_frequency + p.beta_frequency == p.v * (p.v - 1)


def test_alpha_rejects_odd():
    with pytest.raises(ValueError):
        alpha(5)


@pytest.mark.parametrize("n", [4, 6, 8])
def test_gold_cube_pds(n):
    assert check_pds(cube(n))


def test_gold_translate_pds():
    F = cube(6)
    assert check_pds(F.with_table(F.table ^ 5))


def test_check_pds_hypotheses():
    with pytest.raises(ValueError, match="3-to-1"):
        check_pds(from_inverse(FieldSpec.default(6)))
    with pytest.raises(ValueError, match="even"):
        check_pds(cube(5))


def test_is_pds_small_example():
    # the nonzero cubes in F_16 form the image of x^3 minus 0
    F = cube(4)
    D = np.unique(F.table)
    D = D[D != 0]
    p = pds_params(4)
    assert is_pds(D, 4, p.lam, p.mu)
    assert not is_pds(D, 4, p.lam + 1, p.mu)
    assert difference_counts(D, 4).sum() == D.size * (D.size - 1)


# ---- ortho-derivative


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8])
def test_ortho_identity_gold(n):
    F = gold(n)
    od = ortho_derivative(F)
    mult = exclude_spectrum_fast(F).mult
    assert np.array_equal(mult_from_ortho(od)[1:], mult[0, 1:])


def test_ortho_is_orthogonal_to_derivative_images():
    F = gold(6)
    od = ortho_derivative(F)
    xs = np.arange(64)
    for a in range(1, 64):
        img = F.table ^ F.table[xs ^ a] ^ F.table[0] ^ F.table[a]
        assert np.all(np.bitwise_count(img & od.table[a]) % 2 == 0)
        assert od.table[a] != 0


@pytest.mark.parametrize("n", [4, 6, 8])
def test_ortho_weight_bound(n):
    w = ortho_derivative(gold(n)).component_weights()[1:]
    assert w.max() <= component_weight_bound(n)


def test_ortho_nonlinearity_gold():
    assert [ortho_derivative(gold(n)).nonlinearity() for n in (4, 6, 8)] == [4, 24, 104]


def test_ortho_rejects_non_quadratic():
    with pytest.raises(ValueError, match="quadratic"):
        ortho_derivative(from_inverse(FieldSpec.default(5)))


# ---- gamma_F


def test_gamma_autocorrelation_direct():
    F = gold(4)
    ac = gamma_autocorrelation(F)
    g = gamma_function(F)
    for s in (0, 1, 17, 100, 255):
        assert ac.ravel()[s] == autocorrelation(g, s)


@pytest.mark.parametrize("F", [F for n in (4, 5, 6) for F in catalog(n) if _plateaued(F)], ids=str)
def test_mult_from_autocorrelation(F):
    pred = mult_from_autocorrelation(F)
    mult = exclude_spectrum_fast(F).mult
    for a in range(F.size):
        for b in range(F.size):
            if b != F[a]:
                assert mult[a, b] == pred[int(F[a]) ^ b]


def test_mult_from_autocorrelation_needs_plateaued():
    with pytest.raises(ValueError):
        mult_from_autocorrelation(blep_fixture())


@pytest.mark.parametrize("n", [4, 6, 8])
def test_gamma_weight_divisibility(n):
    assert gamma_weight_divisibility(cube(n))
    w = derivative_weights_on_b_axis(cube(n))
    assert w[0] == 0


POWER_APN = [F for n in range(3, 9) for F in catalog(n) if F.exponent is not None and is_apn(F)]


@pytest.mark.parametrize("F", POWER_APN, ids=str)
def test_power_functions_have_no_gamma_linear_structures(F):
    assert gamma_linear_structures(F) == frozenset()


def _random_quadratic_apn(n, seed):
    # random quadratic forms are rarely APN; affine-equivalent copies of gold always are
    rng = np.random.default_rng(seed)
    F = gold(n)
    A = _random_invertible(rng, n)
    B = _random_invertible(rng, n)
    xs = np.arange(1 << n)
    return VectorialFunc(n, _apply(B, F.table[_apply(A, xs)]))


def _random_invertible(rng, n):
    from apnforge.gf2 import rank
    while True:
        cols = rng.integers(0, 1 << n, n)
        if rank(cols) == n:
            return cols


def _apply(cols, xs):
    out = np.zeros_like(xs)
    for i, c in enumerate(cols):
        out ^= np.where((xs >> i) & 1, c, 0)
    return out


@pytest.mark.parametrize("seed", range(6))
def test_linear_structure_iff_max_mult_affine_gold(seed):
    # both directions of the criterion, compared without the built-in cross check
    for n in (4, 6):
        F = _random_quadratic_apn(n, seed)
        assert is_apn(F) and is_quadratic(F) and _plateaued(F)
        has = bool(gamma_linear_structures(F, cross_check=False))
        assert has == max_mult_criterion(F)


@pytest.mark.parametrize("n", [4, 6])
def test_three_to_one_has_no_linear_structure(n):
    F = cube(n)
    assert gamma_linear_structures(F, cross_check=False) == frozenset()
    assert not max_mult_criterion(F)


def test_blep_gamma_cross_check_skipped_when_not_plateaued():
    F = blep_fixture()
    assert not _plateaued(F)
    assert gamma_linear_structures(F) == frozenset()


def test_structure_value_maps_to_max_mult():
    # Delta(0, c) = 2^(2n) in the autocorrelation formula is exactly mult = (2^n - 1) / 3
    for n in (4, 6, 8):
        N = 1 << n
        assert (N - 2) * N + N * N == 6 * N * ((N - 1) // 3)


def test_cross_check_raises_on_disagreement(monkeypatch):
    import apnforge.theory.gamma as gamma
    monkeypatch.setattr(gamma, "max_mult_criterion", lambda F: True)
    with pytest.raises(ArithmeticError):
        gamma.gamma_linear_structures(cube(4))
