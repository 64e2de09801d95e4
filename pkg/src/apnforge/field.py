"""Arithmetic in GF(2^n), 2 <= n <= 16, in a fixed polynomial basis.

Elements are plain Python ints (or numpy integer arrays for the vectorised
helpers) whose bit i is the coefficient of t^i, t being a root of the
modulus.  The default modulus for each n is the lexicographically least
irreducible polynomial of that degree, so every catalog function has a
bit-reproducible truth table.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

MIN_N = 2
MAX_N = 16

# least irreducible polynomial of each degree, as a bitmask
DEFAULT_MODULI = {
    2: 0x7, 3: 0xB, 4: 0x13, 5: 0x25, 6: 0x43, 7: 0x83, 8: 0x11B, 9: 0x203,
    10: 0x409, 11: 0x805, 12: 0x1009, 13: 0x201B, 14: 0x4021, 15: 0x8003,
    16: 0x1002B,
}

# least primitive element for each default modulus
DEFAULT_GENERATORS = {
    2: 2, 3: 2, 4: 2, 5: 2, 6: 2, 7: 2, 8: 3, 9: 7, 10: 2, 11: 2, 12: 3,
    13: 2, 14: 7, 15: 2, 16: 3,
}

# distinct prime factors of 2^n - 1
ORDER_PRIME_FACTORS = {
    2: (3,), 3: (7,), 4: (3, 5), 5: (31,), 6: (3, 7), 7: (127,),
    8: (3, 5, 17), 9: (7, 73), 10: (3, 11, 31), 11: (23, 89),
    12: (3, 5, 7, 13), 13: (8191,), 14: (3, 43, 127), 15: (7, 31, 151),
    16: (3, 5, 17, 257),
}

FieldElement = int


def clmul(x: int, y: int) -> int:
    """Carry-less product of two bit vectors."""
    r = 0
    while y:
        if y & 1:
            r ^= x
        x <<= 1
        y >>= 1
    return r


def polymod(a: int, m: int) -> int:
    """Remainder of a modulo m in GF(2)[x]."""
    dm = m.bit_length()
    while a.bit_length() >= dm:
        a ^= m << (a.bit_length() - dm)
    return a


def is_irreducible(m: int) -> bool:
    """Exhaustive trial division by every polynomial of degree <= deg(m)/2."""
    deg = m.bit_length() - 1
    if deg < 1:
        return False
    for f in range(2, 1 << (deg // 2 + 1)):
        if polymod(m, f) == 0:
            return False
    return True


def _mulmod(x: int, y: int, modulus: int, n: int) -> int:
    r = 0
    top = 1 << n
    while y:
        if y & 1:
            r ^= x
        y >>= 1
        x <<= 1
        if x & top:
            x ^= modulus
    return r


def _powmod(x: int, e: int, modulus: int, n: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = _mulmod(r, x, modulus, n)
        x = _mulmod(x, x, modulus, n)
        e >>= 1
    return r


@dataclass(frozen=True)
class FieldSpec:
    """Model of GF(2^n): modulus, a verified primitive element, lookup tables."""

    n: int
    modulus: int
    generator: int

    def __post_init__(self):
        if not MIN_N <= self.n <= MAX_N:
            raise ValueError(f"field dimension must lie in [{MIN_N}, {MAX_N}], got {self.n}")
        if self.modulus.bit_length() - 1 != self.n:
            raise ValueError(f"modulus {self.modulus:#x} does not have degree {self.n}")
        if not is_irreducible(self.modulus):
            raise ValueError(f"modulus {self.modulus:#x} is reducible")
        if not 0 < self.generator < (1 << self.n):
            raise ValueError(f"generator {self.generator} is not a nonzero field element")
        q = (1 << self.n) - 1
        if _powmod(self.generator, q, self.modulus, self.n) != 1 or any(
            _powmod(self.generator, q // p, self.modulus, self.n) == 1
            for p in ORDER_PRIME_FACTORS[self.n]
        ):
            raise ValueError(f"generator {self.generator} is not primitive modulo {self.modulus:#x}")

    @classmethod
    def default(cls, n: int, modulus: int | None = None) -> "FieldSpec":
        """Default field for n; a user modulus gets its least primitive element."""
        if n not in DEFAULT_MODULI:
            raise ValueError(f"field dimension must lie in [{MIN_N}, {MAX_N}], got {n}")
        if modulus is None or modulus == DEFAULT_MODULI[n]:
            return _default_cache(n)
        return cls(n, modulus, least_primitive_element(n, modulus))

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def order(self) -> int:
        """Order of the multiplicative group."""
        return (1 << self.n) - 1

    @cached_property
    def exp_table(self) -> np.ndarray:
        """exp_table[i] = generator^i for 0 <= i < 2(2^n - 1)."""
        q = self.order
        out = np.empty(2 * q, dtype=np.int64)
        x = 1
        for i in range(q):
            out[i] = x
            x = _mulmod(x, self.generator, self.modulus, self.n)
        out[q:] = out[:q]
        out.setflags(write=False)
        return out

    @cached_property
    def log_table(self) -> np.ndarray:
        """log_table[x] = discrete log of x; log_table[0] is -1."""
        out = np.full(self.size, -1, dtype=np.int64)
        out[self.exp_table[: self.order]] = np.arange(self.order)
        out.setflags(write=False)
        return out

    @cached_property
    def trace_table(self) -> np.ndarray:
        """Absolute trace of every element, as 0/1 bytes."""
        xs = np.arange(self.size, dtype=np.int64)
        acc = xs.copy()
        y = xs
        for _ in range(self.n - 1):
            y = self.mul_array(y, y)
            acc ^= y
        if np.any(acc > 1):
            raise AssertionError("trace left the prime field")
        out = acc.astype(np.uint8)
        out.setflags(write=False)
        return out

    @cached_property
    def trace_dual_table(self) -> np.ndarray:
        """dual[a] is the vector with Tr(a*x) == parity(dual[a] & x) for all x."""
        xs = np.arange(self.size, dtype=np.int64)
        out = np.zeros(self.size, dtype=np.int64)
        for i in range(self.n):
            out |= self.trace_table[self.mul_array(xs, 1 << i)].astype(np.int64) << i
        out.setflags(write=False)
        return out

    def mul_array(self, x, y) -> np.ndarray:
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        lx = self.log_table[x]
        ly = self.log_table[y]
        out = self.exp_table[np.where((lx < 0) | (ly < 0), 0, lx + ly)]
        return np.where((x == 0) | (y == 0), 0, out)

    def pow_array(self, x, d: int) -> np.ndarray:
        if d < 0:
            raise ValueError("exponent must be non-negative")
        x = np.asarray(x, dtype=np.int64)
        if d == 0:
            return np.ones_like(x)
        lx = self.log_table[x]
        out = self.exp_table[np.where(lx < 0, 0, lx) * (d % self.order) % self.order]
        return np.where(x == 0, 0, out)

    def inv_array(self, x) -> np.ndarray:
        return self.pow_array(x, self.order - 1)

    def trace_array(self, x) -> np.ndarray:
        return self.trace_table[np.asarray(x, dtype=np.int64)]


def least_primitive_element(n: int, modulus: int) -> int:
    q = (1 << n) - 1
    for g in range(2 if n > 1 else 1, 1 << n):
        if _powmod(g, q, modulus, n) == 1 and all(
            _powmod(g, q // p, modulus, n) != 1 for p in ORDER_PRIME_FACTORS[n]
        ):
            return g
    raise ValueError(f"no primitive element modulo {modulus:#x}")


_DEFAULTS: dict[int, FieldSpec] = {}


def _default_cache(n: int) -> FieldSpec:
    if n not in _DEFAULTS:
        _DEFAULTS[n] = FieldSpec(n, DEFAULT_MODULI[n], DEFAULT_GENERATORS[n])
    return _DEFAULTS[n]


def _check(spec: FieldSpec, x: int) -> None:
    if not 0 <= x < spec.size:
        raise ValueError(f"{x} is not an element of GF(2^{spec.n})")


def mul(spec: FieldSpec, x: FieldElement, y: FieldElement) -> FieldElement:
    _check(spec, x)
    _check(spec, y)
    return polymod(clmul(x, y), spec.modulus)


def pow(spec: FieldSpec, x: FieldElement, d: int) -> FieldElement:  # noqa: A001
    """x^d with 0^0 = 1."""
    _check(spec, x)
    if d < 0:
        raise ValueError("exponent must be non-negative")
    return _powmod(x, d, spec.modulus, spec.n)


def inv(spec: FieldSpec, x: FieldElement) -> FieldElement:
    """Multiplicative inverse, with inv(0) = 0."""
    _check(spec, x)
    return _powmod(x, spec.order - 1, spec.modulus, spec.n) if x else 0


def trace(spec: FieldSpec, x: FieldElement) -> int:
    _check(spec, x)
    return int(spec.trace_table[x])


def dot(u, v):
    """Standard inner product on F_2^n of bit vectors (ints or int arrays)."""
    if isinstance(u, (int, np.integer)) and isinstance(v, (int, np.integer)):
        return (int(u) & int(v)).bit_count() & 1
    return parity(np.bitwise_and(u, v))


def parity(x) -> np.ndarray:
    """Parity of the popcount of each entry of a non-negative int array (< 2^32)."""
    x = np.asarray(x, dtype=np.int64)
    x = x ^ (x >> 16)
    x = x ^ (x >> 8)
    x = x ^ (x >> 4)
    x = x ^ (x >> 2)
    x = x ^ (x >> 1)
    return (x & 1).astype(np.uint8)


def popcount(x) -> np.ndarray:
    return np.bitwise_count(np.asarray(x, dtype=np.int64)).astype(np.int64)
