import numpy as np
import pytest

from apnforge.catalog import blep_fixture, catalog
from apnforge.exclude import exclude_spectrum_fast
from apnforge.spectral import plateau_profile, walsh_spectrum
from apnforge.theory.plateaued import (
    INCONCLUSIVE, NOT_PLATEAUED_EQUIVALENT, bent_indicator_transform, bent_parity_predicts_odd,
    cube_and_fourth_rows, divisibility_holds, mult_from_amplitudes, mult_from_hyperplanes,
    plateaued_min_bound, plateaued_nonequivalence_test, plateaued_uniformity_holds,
)
from apnforge.vbf import identity

from helpers import gold


def plateaued_catalog(ns):
    return [F for n in ns for F in catalog(n) if plateau_profile(walsh_spectrum(F)).is_plateaued]


PLAT = plateaued_catalog([4, 5, 6])


@pytest.mark.parametrize("F", PLAT, ids=str)
def test_uniformity_along_translates(F):
    assert plateaued_uniformity_holds(F)


def test_uniformity_fails_for_inverse():
    from apnforge.field import FieldSpec
    from apnforge.vbf import from_inverse
    assert not plateaued_uniformity_holds(from_inverse(FieldSpec.default(5)), rows=[1])


@pytest.mark.parametrize("F", PLAT, ids=str)
def test_amplitude_and_hyperplane_formulas(F):
    mult = exclude_spectrum_fast(F).mult
    amp = mult_from_amplitudes(F)
    hyp = mult_from_hyperplanes(F)
    assert np.array_equal(amp[1:], hyp[1:])
    for a in range(F.size):
        for b in range(F.size):
            if b != F[a]:
                assert mult[a, b] == amp[int(F[a]) ^ b]


@pytest.mark.parametrize("F", PLAT, ids=str)
def test_cube_row_equals_fourth_row(F):
    c3, c4 = cube_and_fourth_rows(F)
    assert np.array_equal(F.size * c3[1:], c4[1:])


@pytest.mark.parametrize("F", [F for F in PLAT if F.n % 2 == 0], ids=str)
def test_bent_parity(F):
    prof = plateau_profile(walsh_spectrum(F))
    assert len(prof.bent_components) % 4 == 2
    odd = (mult_from_amplitudes(F) % 2 == 1)
    pred = bent_parity_predicts_odd(F)
    assert np.array_equal(odd[1:], pred[1:])
    hat = bent_indicator_transform(F)
    assert np.array_equal(pred[1:], hat[1:] % 4 == 2)


@pytest.mark.parametrize("F", PLAT, ids=str)
def test_divisibility_and_min_bound(F):
    assert divisibility_holds(F)
    if F.n % 2 == 0:
        assert exclude_spectrum_fast(F).e_min >= plateaued_min_bound(F.n)


def test_min_bound_values():
    assert [plateaued_min_bound(n) for n in (4, 6, 8)] == [1, 3, 7]
    with pytest.raises(ValueError):
        plateaued_min_bound(5)


def test_nonequivalence_verdict_blep():
    v = plateaued_nonequivalence_test(blep_fixture())
    assert v.label == NOT_PLATEAUED_EQUIVALENT and v.conclusive
    assert v.witness == (5, 40) and v.modulus == 64


def test_nonequivalence_inconclusive_for_gold():
    v = plateaued_nonequivalence_test(gold(6))
    assert v.label == INCONCLUSIVE and not v.conclusive


def test_formulas_reject_non_plateaued():
    with pytest.raises(ValueError):
        mult_from_amplitudes(blep_fixture())
    with pytest.raises(ValueError):
        plateaued_nonequivalence_test(identity(3))
