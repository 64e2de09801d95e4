"""Vectorial Boolean functions F: F_2^n -> F_2^n as truth tables."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field

import numpy as np

from . import field as gf
from .field import FieldSpec

# rows of the difference table processed per numpy batch
_ROW_BATCH = 256


def _frozen(arr) -> np.ndarray:
    out = np.array(arr, dtype=np.int64)
    out.setflags(write=False)
    return out


@dataclass(frozen=True, eq=False)
class VectorialFunc:
    """Truth table of an (n, n)-function, optionally tied to the field it came from.

    ``exponent`` is set when the table is the monomial x -> x^d over ``field``.
    """

    n: int
    table: np.ndarray
    field: FieldSpec | None = None
    exponent: int | None = None
    name: str = ""
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self):
        tab = _frozen(self.table)
        object.__setattr__(self, "table", tab)
        if self.n < 1:
            raise ValueError("dimension must be positive")
        if tab.ndim != 1 or tab.size != 1 << self.n:
            raise ValueError(f"truth table must have exactly {1 << self.n} entries, got {tab.size}")
        if tab.size and (tab.min() < 0 or tab.max() >= 1 << self.n):
            raise ValueError(f"truth table entries must lie in [0, {(1 << self.n) - 1}]")
        if self.field is not None and self.field.n != self.n:
            raise ValueError("field dimension does not match the function")

    @property
    def size(self) -> int:
        return 1 << self.n

    def __len__(self):
        return self.size

    def __getitem__(self, x):
        return self.table[x]

    def __eq__(self, other):
        if not isinstance(other, VectorialFunc):
            return NotImplemented
        return self.n == other.n and np.array_equal(self.table, other.table)

    def __hash__(self):
        return hash((self.n, self.table.tobytes()))

    def with_table(self, table, name: str = "") -> "VectorialFunc":
        return VectorialFunc(self.n, table, field=self.field, name=name)

    def translated(self) -> "VectorialFunc":
        """F + F(0), the translate vanishing at 0 (same exclude spectrum up to a shift)."""
        if self.table[0] == 0:
            return self
        return VectorialFunc(self.n, self.table ^ self.table[0], field=self.field, name=self.name)


@dataclass(frozen=True, eq=False)
class BooleanFunc:
    """Boolean function on ``n_in`` bits, stored as a packed little-endian bit table."""

    n_in: int
    packed: np.ndarray

    @classmethod
    def from_bits(cls, bits) -> "BooleanFunc":
        bits = np.asarray(bits, dtype=np.uint8)
        n_in = int(bits.size).bit_length() - 1
        if bits.size != 1 << n_in:
            raise ValueError("bit table length must be a power of two")
        if np.any(bits > 1):
            raise ValueError("bit table entries must be 0 or 1")
        packed = np.packbits(bits, bitorder="little")
        packed.setflags(write=False)
        return cls(n_in, packed)

    @property
    def bits(self) -> np.ndarray:
        return np.unpackbits(self.packed, bitorder="little", count=1 << self.n_in)

    @property
    def weight(self) -> int:
        return int(np.bitwise_count(self.packed).sum())

    def __getitem__(self, x) -> int:
        return int((self.packed[x >> 3] >> (x & 7)) & 1)

    def __eq__(self, other):
        if not isinstance(other, BooleanFunc):
            return NotImplemented
        return self.n_in == other.n_in and np.array_equal(self.bits, other.bits)

    def __hash__(self):
        return hash((self.n_in, self.packed.tobytes()))


@dataclass(frozen=True, eq=False)
class DifferenceTables:
    """delta[a, b] = #{x : F(x) + F(x + a) = b}; gamma(a, b) = [a != 0 and delta[a, b] > 0].

    gamma is a Boolean function on 2n bits indexed by (a << n) | b.
    """

    n: int
    delta: np.ndarray
    gamma: BooleanFunc


def from_monomial(spec: FieldSpec, d: int) -> VectorialFunc:
    if d < 0:
        raise ValueError("exponent must be non-negative")
    table = spec.pow_array(np.arange(spec.size), d)
    return VectorialFunc(spec.n, table, field=spec, exponent=d, name=f"x^{d}")


def from_inverse(spec: FieldSpec) -> VectorialFunc:
    """x -> x^(-1) with 0 -> 0."""
    table = spec.inv_array(np.arange(spec.size))
    return VectorialFunc(spec.n, table, field=spec, exponent=spec.order - 1, name="x^-1")


def identity(n: int) -> VectorialFunc:
    return VectorialFunc(n, np.arange(1 << n), name="identity")


def derivative(F: VectorialFunc, a: int) -> VectorialFunc:
    xs = np.arange(F.size)
    return F.with_table(F.table ^ F.table[xs ^ a], name=f"D_{a}")


def shifted_derivative_image(F: VectorialFunc, a: int, beta: int) -> frozenset[int]:
    """Image of x -> F(x) + F(x + a) + F(a + beta)."""
    xs = np.arange(F.size)
    vals = F.table ^ F.table[xs ^ a] ^ F.table[a ^ beta]
    return frozenset(int(v) for v in np.unique(vals))


def _delta_rows(F: VectorialFunc, rows: np.ndarray) -> np.ndarray:
    N = F.size
    xs = np.arange(N)
    d = F.table[None, :] ^ F.table[xs[None, :] ^ rows[:, None]]
    d += (np.arange(rows.size) * N)[:, None]
    return np.bincount(d.ravel(), minlength=rows.size * N).reshape(rows.size, N)


def ddt(F: VectorialFunc) -> np.ndarray:
    """Difference distribution table delta[a, b]."""
    N = F.size
    out = np.empty((N, N), dtype=np.uint32)
    for start in range(0, N, _ROW_BATCH):
        rows = np.arange(start, min(N, start + _ROW_BATCH))
        out[rows] = _delta_rows(F, rows)
    return out


def difference_tables(F: VectorialFunc) -> DifferenceTables:
    delta = ddt(F)
    g = delta > 0
    g[0, :] = False
    return DifferenceTables(F.n, delta, BooleanFunc.from_bits(g.ravel()))


def gamma_function(F: VectorialFunc) -> BooleanFunc:
    if "gamma" not in F._cache:
        F._cache["gamma"] = difference_tables(F).gamma
    return F._cache["gamma"]


def differential_uniformity(F: VectorialFunc) -> int:
    N = F.size
    best = 0
    for start in range(1, N, _ROW_BATCH):
        rows = np.arange(start, min(N, start + _ROW_BATCH))
        best = max(best, int(_delta_rows(F, rows).max()))
    return best


def is_apn(F: VectorialFunc) -> bool:
    if "apn" not in F._cache:
        N = F.size
        ok = True
        for start in range(1, N, _ROW_BATCH):
            rows = np.arange(start, min(N, start + _ROW_BATCH))
            if _delta_rows(F, rows).max() > 2:
                ok = False
                break
        F._cache["apn"] = ok
    return F._cache["apn"]


def preimage_sizes(F: VectorialFunc) -> Counter:
    """Map preimage size -> number of image points with that many preimages."""
    counts = np.bincount(F.table, minlength=F.size)
    return Counter(int(c) for c in counts if c)


def is_3to1(F: VectorialFunc) -> bool:
    """Every image point has exactly 3 preimages except a single point with 1."""
    shape = preimage_sizes(F)
    return shape.get(1) == 1 and set(shape) == {1, 3}


def anf(F: VectorialFunc) -> np.ndarray:
    """Algebraic normal form of all coordinates at once (binary Moebius transform).

    anf[m] is the vector whose bit i is the coefficient of the monomial m in
    coordinate i.  The transform is an involution.
    """
    return moebius(F.table)


def moebius(table) -> np.ndarray:
    out = np.array(table, dtype=np.int64)
    N = out.size
    h = 1
    while h < N:
        view = out.reshape(-1, 2, h)
        view[:, 1, :] ^= view[:, 0, :]
        h *= 2
    return out


def algebraic_degree(F: VectorialFunc) -> int:
    """Maximum weight of an ANF monomial over all coordinates (0 for constants)."""
    if "degree" not in F._cache:
        coeffs = anf(F)
        support = np.nonzero(coeffs)[0]
        F._cache["degree"] = int(gf.popcount(support).max()) if support.size else 0
    return F._cache["degree"]


def is_quadratic(F: VectorialFunc) -> bool:
    """Algebraic degree exactly 2 (every derivative affine, F itself not affine)."""
    return algebraic_degree(F) == 2


def hamming_distance(F: VectorialFunc, G: VectorialFunc) -> int:
    if F.n != G.n:
        raise ValueError(f"dimension mismatch: {F.n} vs {G.n}")
    return int(np.count_nonzero(F.table != G.table))


def graph_points(F: VectorialFunc) -> np.ndarray:
    """The graph {(x, F(x))} encoded as (x << n) | F(x)."""
    return (np.arange(F.size, dtype=np.int64) << F.n) | F.table


def graph_indicator(F: VectorialFunc, dtype=np.int64) -> np.ndarray:
    out = np.zeros(1 << (2 * F.n), dtype=dtype)
    out[graph_points(F)] = 1
    return out


def component(F: VectorialFunc, v: int) -> BooleanFunc:
    """The Boolean function x -> v . F(x)."""
    return BooleanFunc.from_bits(gf.parity(F.table & v))
