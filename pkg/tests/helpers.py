"""Small independent oracles shared by the tests."""

import numpy as np

from apnforge.catalog import Family, FamilySpec, build
from apnforge.field import FieldSpec
from apnforge.vbf import VectorialFunc


def hadamard(n):
    xs = np.arange(1 << n)
    dots = (np.bitwise_count(xs[:, None] & xs[None, :]) & 1).astype(np.int64)
    return 1 - 2 * dots


def gold(n, k=1):
    return build(FamilySpec(Family.GOLD, n, k=k))


def random_table(rng, n):
    return VectorialFunc(n, rng.integers(0, 1 << n, 1 << n))


def random_permutation(rng, n):
    return VectorialFunc(n, rng.permutation(1 << n))


def cube(n):
    from apnforge.vbf import from_monomial
    return from_monomial(FieldSpec.default(n), 3)
