"""Identities specific to APN power functions x -> x^d."""

from __future__ import annotations

import numpy as np

from ..exclude import ON_GRAPH, exclude_spectrum_fast
from ..field import FieldSpec
from ..vbf import VectorialFunc, gamma_function, is_apn


def _require_power(F: VectorialFunc):
    if F.field is None or F.exponent is None:
        raise ValueError("needs a power function x^d built over a field")
    if not is_apn(F):
        raise ValueError("needs an APN power function")


def power_uniformity_check(F: VectorialFunc, pairs=None) -> bool:
    """mult(a, b) == mult(c, (c/a)^d b) for a, c != 0 and b != a^d.

    ``pairs`` is an iterable of (a, c); default is every pair.  Each pair is
    checked for every b at once.
    """
    _require_power(F)
    spec, d = F.field, F.exponent
    mult = exclude_spectrum_fast(F).mult
    N = F.size
    bs = np.arange(N)
    if pairs is None:
        pairs = ((a, c) for a in range(1, N) for c in range(1, N))
    inv = spec.inv_array(np.arange(N))
    for a, c in pairs:
        scale = int(spec.pow_array(spec.mul_array(inv[a], c), d))
        image = spec.mul_array(bs, scale)
        off = bs != F.table[a]
        if not np.array_equal(mult[a, off], mult[c, image[off]]):
            return False
    return True


def power_axis_mults(F: VectorialFunc, a: int) -> tuple[int, int]:
    """(mult(a, 0), mult(0, a)) for a != 0."""
    _require_power(F)
    if a == 0:
        raise ValueError("a must be nonzero")
    mult = exclude_spectrum_fast(F).mult
    return int(mult[a, 0]), int(mult[0, a])


def axis_value(n: int) -> int:
    """(2^(n-1) - 1) / 3, the axis multiplicity of APN power functions for odd n."""
    if n % 2 == 0:
        raise ValueError("axis value is only determined for odd n")
    return ((1 << (n - 1)) - 1) // 3


def image_of_d1(F: VectorialFunc) -> np.ndarray:
    xs = np.arange(F.size)
    return np.unique(F.table ^ F.table[xs ^ 1])


def phi_preimage_mult(F: VectorialFunc, a: int, b: int) -> int:
    """|Phi^-1(im D_1 F)| for Phi(x) = (x^d + b) / (x + a)^d on F minus {a}.

    Cross-checked against sum_x gamma_F(x + a, F(x) + b), which is
    3 mult(a, b) off the graph and 2^n - 1 on it.
    """
    _require_power(F)
    spec = F.field
    N = F.size
    xs = np.arange(N)
    xs = xs[xs != a]
    num = F.table[xs] ^ b
    den = spec.inv_array(F.table[xs ^ a])
    phi = spec.mul_array(num, den)
    hits = np.zeros(N, dtype=bool)
    hits[image_of_d1(F)] = True
    count = int(np.count_nonzero(hits[phi]))

    gamma = gamma_function(F).bits
    all_x = np.arange(N)
    gsum = int(gamma[((all_x ^ a) << F.n) | (F.table ^ b)].sum())
    if count != gsum:
        raise ArithmeticError(f"preimage count {count} != gamma sum {gsum}")
    m = exclude_spectrum_fast(F).mult[a, b]
    expected = N - 1 if m == ON_GRAPH else 3 * int(m)
    if count != expected:
        raise ArithmeticError(f"preimage count {count} != {expected}")
    return count


def fractional_map_is_2to1(spec: FieldSpec, d: int, a: int) -> bool:
    """x -> (x^d + a^d) / (x + a)^d is 2-to-1 from F minus {0, a} onto a subset of F minus {1}."""
    xs = np.arange(spec.size)
    xs = xs[(xs != 0) & (xs != a)]
    num = spec.pow_array(xs, d) ^ int(spec.pow_array(a, d))
    den = spec.inv_array(spec.pow_array(xs ^ a, d))
    vals = spec.mul_array(num, den)
    if np.any(vals == 1):
        return False
    counts = np.bincount(vals, minlength=spec.size)
    return bool(np.all((counts == 0) | (counts == 2)))


def monomial_apn_via_fractional_map(spec: FieldSpec, d: int) -> bool:
    """APN test for x^d: the fractional map above is 2-to-1 for every a != 0."""
    if d < 1:
        raise ValueError("exponent must be positive")
    return all(fractional_map_is_2to1(spec, d, a) for a in range(1, spec.size))
