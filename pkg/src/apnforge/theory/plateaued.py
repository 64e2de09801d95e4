"""Exclude-spectrum identities for plateaued APN functions and the non-equivalence test."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import field as gf
from ..exclude import exclude_spectrum_fast
from ..spectral import fwht_in_place, plateau_profile, walsh_spectrum
from ..vbf import VectorialFunc, is_apn

NOT_PLATEAUED_EQUIVALENT = "not CCZ-equivalent to any plateaued function"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Verdict:
    label: str
    witness: tuple | None = None  # (k, m_k) with 2^n not dividing m_k
    modulus: int = 0

    @property
    def conclusive(self) -> bool:
        return self.witness is not None


def plateaued_nonequivalence_test(F: VectorialFunc) -> Verdict:
    """Frequencies m_k of a plateaued APN graph are all multiples of 2^n; any other frequency is a witness."""
    if not is_apn(F):
        raise ValueError("needs an APN function")
    hist = exclude_spectrum_fast(F).histogram
    for k, m in hist.items():
        if m % F.size:
            return Verdict(NOT_PLATEAUED_EQUIVALENT, (k, m), F.size)
    return Verdict(INCONCLUSIVE, None, F.size)


def plateaued_uniformity_holds(F: VectorialFunc, rows=None) -> bool:
    """mult(a, b) == mult(c, b + F(a) + F(c)) for all c, checked for each a in ``rows``."""
    mult = exclude_spectrum_fast(F).mult
    N = F.size
    bs = np.arange(N)
    for a in range(N) if rows is None else rows:
        off = bs != F.table[a]
        ref = mult[a, off]
        for c in range(N):
            if not np.array_equal(ref, mult[c, bs[off] ^ F.table[a] ^ F.table[c]]):
                return False
    return True


def divisibility_holds(F: VectorialFunc) -> bool:
    return all(m % F.size == 0 for m in exclude_spectrum_fast(F).histogram.values())


def plateaued_min_bound(n: int) -> int:
    """2^(n/2 - 1) - 1, a lower bound on every multiplicity for plateaued APN, n even."""
    if n % 2:
        raise ValueError("bound stated for even n")
    return (1 << (n // 2 - 1)) - 1


def mult_from_amplitudes(F: VectorialFunc) -> np.ndarray:
    """sum_v (-1)^(v.c) lambda_v^2 / (6 * 2^n) for every c (entry 0 unused)."""
    prof = plateau_profile(walsh_spectrum(F))
    if not prof.is_plateaued:
        raise ValueError("function is not plateaued")
    s = fwht_in_place(prof.amplitude_squares().copy())
    out = np.full(F.size, -1, dtype=np.int64)
    if np.any(s[1:] % (6 * F.size)):
        raise ArithmeticError("amplitude sum not divisible by 6 * 2^n")
    out[1:] = s[1:] // (6 * F.size)
    return out


def mult_from_hyperplanes(F: VectorialFunc) -> np.ndarray:
    """(sum_{v . c = 0} lambda_v^2 - 2^(n-1)(3 * 2^n - 2)) / (3 * 2^n) for every c != 0."""
    prof = plateau_profile(walsh_spectrum(F))
    if not prof.is_plateaued:
        raise ValueError("function is not plateaued")
    N = F.size
    sq = prof.amplitude_squares()
    vs = np.arange(N)
    out = np.full(N, -1, dtype=np.int64)
    for c in range(1, N):
        h = int(sq[gf.parity(vs & c) == 0].sum())
        num = h - (N // 2) * (3 * N - 2)
        if num % (3 * N):
            raise ArithmeticError("hyperplane amplitude sum not divisible by 3 * 2^n")
        out[c] = num // (3 * N)
    return out


def bent_parity_predicts_odd(F: VectorialFunc) -> np.ndarray:
    """For each c != 0: |B(F) intersect c-perp| is even (predicts an odd multiplicity on c)."""
    prof = plateau_profile(walsh_spectrum(F))
    bent = np.array(sorted(prof.bent_components), dtype=np.int64)
    out = np.zeros(F.size, dtype=bool)
    for c in range(1, F.size):
        inside = int(np.count_nonzero(gf.parity(bent & c) == 0)) if bent.size else 0
        out[c] = inside % 2 == 0
    return out


def bent_indicator_transform(F: VectorialFunc) -> np.ndarray:
    """Transform of the indicator of B(F)."""
    prof = plateau_profile(walsh_spectrum(F))
    ind = np.zeros(F.size, dtype=np.int64)
    ind[list(prof.bent_components)] = 1
    return fwht_in_place(ind)


def cube_and_fourth_rows(F: VectorialFunc) -> tuple[np.ndarray, np.ndarray]:
    """(C3(0, c), C4(0, c)) for all c, with Ck(0, c) = sum_{u,v} (-1)^(c.v) W(u, v)^k."""
    W = walsh_spectrum(F).values.astype(np.int64)
    w3 = fwht_in_place((W ** 3).sum(axis=0))
    w4 = fwht_in_place((W ** 4).sum(axis=0))
    return w3, w4
