"""Binary Kloosterman sums K_n(a) = sum_x (-1)^Tr(a x + 1/x), with 1/0 = 0."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ..field import FieldSpec
from ..spectral import fwht_in_place


@dataclass(frozen=True, eq=False)
class KloostermanTable:
    n: int
    values: np.ndarray

    @property
    def shifted(self) -> np.ndarray:
        """K*_n(a) = K_n(a) - 1, the sum over nonzero x."""
        return self.values - 1

    @property
    def max_dev(self) -> int:
        """max over a != 0 of |K_n(a) - 1|."""
        return int(np.abs(self.shifted[1:]).max())


def _require_odd(n):
    if n % 2 == 0:
        raise ValueError(f"Kloosterman tables are only supported for odd n, got n={n}")


def kloosterman_table(spec: FieldSpec) -> KloostermanTable:
    """All K_n(a) at once: the Walsh transform of x -> Tr(1/x), read through the trace dual basis."""
    _require_odd(spec.n)
    xs = np.arange(spec.size)
    f = spec.trace_array(spec.inv_array(xs)).astype(np.int64)
    w = fwht_in_place(1 - 2 * f)
    # Tr(a x) = dual[a] . x, so K_n(a) is the coefficient at dual[a]
    vals = w[spec.trace_dual_table]
    vals.setflags(write=False)
    table = KloostermanTable(spec.n, vals)
    check_kloosterman(table)
    return table


def kloosterman_direct(spec: FieldSpec, a: int) -> int:
    """K_n(a) by summation over the field (oracle)."""
    xs = np.arange(spec.size)
    t = spec.trace_array(spec.mul_array(xs, a) ^ spec.inv_array(xs))
    return int(spec.size - 2 * int(t.sum()))


def check_kloosterman(table: KloostermanTable) -> None:
    """K_n(a) - 1 is 3 mod 4 and at most 2^(n/2 + 1) in absolute value, for a != 0."""
    ks = table.shifted[1:]
    if np.any(ks % 4 != 3):
        raise ArithmeticError("a Kloosterman sum K_n(a) - 1 is not 3 mod 4")
    if np.any(ks.astype(np.float64) ** 2 > 2.0 ** (table.n + 2)):
        raise ArithmeticError("a Kloosterman sum exceeds 2^(n/2 + 1)")


def inverse_exclude_bound(table: KloostermanTable) -> int:
    """ceil((2^n - 5 - max |K_n(a) - 1|) / 6), a lower bound on e_min for x^-1."""
    return math.ceil(((1 << table.n) - 5 - table.max_dev) / 6)


def inverse_distance_bound(table: KloostermanTable) -> int:
    return inverse_exclude_bound(table) + 1
