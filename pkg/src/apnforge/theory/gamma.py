"""Autocorrelation and linear structures of the Boolean function gamma_F."""

from __future__ import annotations

import numpy as np

from ..exclude import exclude_spectrum_fast
from ..spectral import autocorrelation_spectrum, plateau_profile, walsh_spectrum
from ..vbf import VectorialFunc, gamma_function, is_apn, is_quadratic


def gamma_autocorrelation(F: VectorialFunc) -> np.ndarray:
    """Delta[a, b] = sum_(x,y) (-1)^(gamma(x, y) + gamma(x + a, y + b))."""
    if "gamma_ac" not in F._cache:
        ac = autocorrelation_spectrum(gamma_function(F)).reshape(F.size, F.size)
        ac.setflags(write=False)
        F._cache["gamma_ac"] = ac
    return F._cache["gamma_ac"]


def max_mult_criterion(F: VectorialFunc) -> bool:
    """Some exclude point of the graph reaches the largest possible value (2^n - 1) / 3."""
    if (F.size - 1) % 3:
        return False
    return exclude_spectrum_fast(F).e_max == (F.size - 1) // 3


def _plateaued_even(F: VectorialFunc) -> bool:
    return F.n >= 4 and F.n % 2 == 0 and plateau_profile(walsh_spectrum(F)).is_plateaued


def gamma_linear_structures(F: VectorialFunc, cross_check: bool = True) -> frozenset:
    """Nonzero (a, b), encoded (a << n) | b, with D_(a,b) gamma_F constant.

    For plateaued F with n even >= 4 the answer is checked against the
    maximal-multiplicity criterion, which must agree.
    """
    if not is_apn(F):
        raise ValueError("needs an APN function")
    ac = gamma_autocorrelation(F).ravel()
    full = 1 << (2 * F.n)
    hits = np.nonzero(np.abs(ac) == full)[0]
    structures = frozenset(int(s) for s in hits if s != 0)
    if cross_check and _plateaued_even(F):
        if bool(structures) != max_mult_criterion(F):
            raise ArithmeticError("linear structures of gamma_F disagree with the maximal-multiplicity criterion")
    return structures


def mult_from_autocorrelation(F: VectorialFunc) -> np.ndarray:
    """(2^n - 2) / 6 + Delta(0, c) / (6 * 2^n) for every c (entry 0 unused).

    Valid for plateaued APN F, where it gives mult(a, b) at c = F(a) + b.
    """
    if not plateau_profile(walsh_spectrum(F)).is_plateaued:
        raise ValueError("function is not plateaued")
    N = F.size
    num = N * (N - 2) + gamma_autocorrelation(F)[0].astype(np.int64)
    out = np.full(N, -1, dtype=np.int64)
    if np.any(num[1:] % (6 * N)):
        raise ArithmeticError("autocorrelation does not give an integral multiplicity")
    out[1:] = num[1:] // (6 * N)
    return out


def derivative_weights_on_b_axis(F: VectorialFunc) -> np.ndarray:
    """wt(D_(0,b) gamma_F) for every b."""
    ac = gamma_autocorrelation(F)[0].astype(np.int64)
    return ((F.size * F.size) - ac) // 2


def gamma_weight_divisibility(F: VectorialFunc) -> bool:
    """wt(D_(0,b) gamma_F) is a multiple of 6 * 2^n in [0, 2^n (2^n - 3 * 2^(n/2-1) + 2)] for b != 0."""
    n, N = F.n, F.size
    if n < 4 or n % 2:
        raise ValueError(f"needs even n >= 4, got n={n}")
    if not (is_quadratic(F) and is_apn(F)):
        raise ValueError("needs a quadratic APN function")
    if F.table[0] != 0:
        raise ValueError("needs F(0) = 0")
    w = derivative_weights_on_b_axis(F)[1:]
    upper = N * (N - 3 * (1 << (n // 2 - 1)) + 2)
    return bool(np.all(w % (6 * N) == 0) and np.all((w >= 0) & (w <= upper)))
