"""Ortho-derivatives of quadratic APN functions."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .. import field as gf
from .. import gf2
from ..spectral import walsh_spectrum
from ..vbf import VectorialFunc, is_apn, is_quadratic


@dataclass(frozen=True, eq=False)
class OrthoDerivative:
    """table[a] is the normal vector of the hyperplane im(D_a F) + F(0) + F(a)."""

    n: int
    table: np.ndarray

    def as_function(self) -> VectorialFunc:
        return VectorialFunc(self.n, self.table, name="ortho-derivative")

    def component_weights(self) -> np.ndarray:
        """wt(b . pi_F) for every b (entry 0 is 0)."""
        bs = np.arange(1 << self.n)
        return np.array([int(gf.parity(self.table & b).sum()) for b in bs], dtype=np.int64)

    def nonlinearity(self) -> int:
        return walsh_spectrum(self.as_function()).nonlinearity


def ortho_derivative(F: VectorialFunc) -> OrthoDerivative:
    if not is_quadratic(F):
        raise ValueError("ortho-derivative needs a quadratic function (algebraic degree 2)")
    if not is_apn(F):
        raise ValueError("ortho-derivative needs an APN function")
    n, N = F.n, F.size
    xs = np.arange(N)
    out = np.zeros(N, dtype=np.int64)
    for a in range(1, N):
        vecs = np.unique(F.table ^ F.table[xs ^ a] ^ F.table[0] ^ F.table[a])
        basis = gf2.xor_basis(vecs.tolist())
        if len(basis) != n - 1:
            raise ArithmeticError(f"derivative image in direction {a} spans dimension {len(basis)}, expected {n - 1}")
        (normal,) = gf2.nullspace(basis, n)
        out[a] = normal
    return OrthoDerivative(n, out)


def mult_from_ortho(od: OrthoDerivative) -> np.ndarray:
    """(2^n - 1 - wt(b . pi_F)) / 3 for every b != 0 (entry 0 unused, set to -1)."""
    w = od.component_weights()
    num = (1 << od.n) - 1 - w
    if np.any(num[1:] % 3):
        raise ArithmeticError("ortho-derivative weights not congruent to 2^n - 1 mod 3")
    out = num // 3
    out[0] = -1
    return out


def component_weight_bound(n: int) -> int:
    """Upper bound on wt(b . pi_F), b != 0, for quadratic APN F, n even."""
    return (1 << n) + 2 - 3 * (1 << (n // 2 - 1))
