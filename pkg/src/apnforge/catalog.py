"""Named APN functions and truth-table / polynomial file I/O."""

from __future__ import annotations

import enum
import io
import math
import os
import re
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .field import FieldSpec
from .vbf import VectorialFunc, from_inverse, from_monomial

# The sporadic n = 6 function needs u to be a root of this polynomial;
# for the other primitive elements the same formula is not APN.
BLEP_MIN_POLY = 0x5B


class Family(str, enum.Enum):
    GOLD = "gold"
    KASAMI = "kasami"
    WELCH = "welch"
    NIHO = "niho"
    INVERSE = "inverse"
    DOBBERTIN = "dobbertin"
    BLEP = "blep"
    MONOMIAL = "monomial"
    FILE = "file"


POWER_FAMILIES = (Family.GOLD, Family.KASAMI, Family.WELCH, Family.NIHO, Family.INVERSE, Family.DOBBERTIN)


class ConstraintError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int | None = None
    k: int | None = None
    t: int | None = None
    d: int | None = None
    modulus: int | None = None
    path: str | None = None

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))

    @property
    def field(self) -> FieldSpec:
        return FieldSpec.default(self.n, self.modulus)

    def label(self) -> str:
        parts = [self.family.value]
        for key in ("n", "k", "t", "d"):
            val = getattr(self, key)
            if val is not None:
                parts.append(f"{key}={val}")
        if self.modulus is not None:
            parts.append(f"modulus={self.modulus:#x}")
        if self.path is not None:
            parts.append(f"path={self.path}")
        return " ".join(parts)


def _odd_t(spec: FamilySpec, name: str) -> int:
    n = spec.n
    if n % 2 == 0:
        raise ConstraintError(f"{name} needs n = 2t + 1 odd, got n={n}")
    t = (n - 1) // 2
    if spec.t is not None and spec.t != t:
        raise ConstraintError(f"{name} needs n = 2t + 1, but t={spec.t} and n={n}")
    return t


def exponent(spec: FamilySpec) -> int:
    """Exponent d of a power family, after checking its parameter condition."""
    n, fam = spec.n, spec.family
    if n is None:
        raise ConstraintError("dimension n is required")
    if fam in (Family.GOLD, Family.KASAMI):
        k = 1 if spec.k is None else spec.k
        if k < 1 or math.gcd(k, n) != 1:
            raise ConstraintError(f"{fam.value} needs k >= 1 with gcd(k, n) = 1, got k={k}, n={n}")
        return (1 << k) + 1 if fam is Family.GOLD else (1 << (2 * k)) - (1 << k) + 1
    if fam is Family.WELCH:
        return (1 << _odd_t(spec, "Welch")) + 3
    if fam is Family.NIHO:
        t = _odd_t(spec, "Niho")
        if t % 2 == 0:
            return (1 << t) + (1 << (t // 2)) - 1
        return (1 << t) + (1 << ((3 * t + 1) // 2)) - 1
    if fam is Family.INVERSE:
        _odd_t(spec, "Inverse")
        return (1 << n) - 2
    if fam is Family.DOBBERTIN:
        if n % 5:
            raise ConstraintError(f"Dobbertin needs n = 5t, got n={n}")
        t = n // 5
        if spec.t is not None and spec.t != t:
            raise ConstraintError(f"Dobbertin needs n = 5t, but t={spec.t} and n={n}")
        return (1 << (4 * t)) + (1 << (3 * t)) + (1 << (2 * t)) + (1 << t) - 1
    if fam is Family.MONOMIAL:
        if spec.d is None or spec.d < 0:
            raise ConstraintError("monomial needs an exponent d >= 0")
        return spec.d
    raise ConstraintError(f"{fam.value} is not a power family")


def build(spec: FamilySpec) -> VectorialFunc:
    fam = spec.family
    if fam is Family.FILE:
        if spec.path is None:
            raise ConstraintError("file family needs a path")
        return parse(spec.path, modulus=spec.modulus)
    if fam is Family.BLEP:
        if spec.n not in (None, 6):
            raise ConstraintError(f"BLEP is defined for n = 6 only, got n={spec.n}")
        F = blep(FieldSpec.default(6, spec.modulus))
        return F
    d = exponent(spec)
    fs = spec.field
    if fam is Family.INVERSE:
        F = from_inverse(fs)
    else:
        F = from_monomial(fs, d)
    return VectorialFunc(F.n, F.table, field=fs, exponent=F.exponent, name=spec.label())


# ---------------------------------------------------------------- BLEP


def blep_roots(fs: FieldSpec) -> list[int]:
    """Roots of the BLEP defining polynomial in ``fs`` (n = 6)."""
    xs = np.arange(fs.size)
    acc = np.zeros(fs.size, dtype=np.int64)
    for i in range(7):
        if BLEP_MIN_POLY >> i & 1:
            acc ^= fs.pow_array(xs, i)
    return [int(x) for x in np.nonzero(acc == 0)[0]]


def blep(fs: FieldSpec, u: int | None = None) -> VectorialFunc:
    """The sporadic n = 6 APN function, a cubic plus a trace term.

    u defaults to the least root of BLEP_MIN_POLY; the trace value enters as
    the field element 0 or 1.
    """
    if fs.n != 6:
        raise ConstraintError(f"BLEP is defined for n = 6 only, got n={fs.n}")
    if u is None:
        u = blep_roots(fs)[0]
    FieldSpec(6, fs.modulus, u)  # validates that u is primitive
    xs = np.arange(fs.size)

    def U(e):
        return int(fs.pow_array(u, e))

    def X(e):
        return fs.pow_array(xs, e)

    def m(c, v):
        return fs.mul_array(v, c)

    out = X(3) ^ m(U(17), X(17) ^ X(18) ^ X(20) ^ X(24))
    out ^= m(U(14), m(U(18), X(9)) ^ m(U(36), X(18)) ^ m(U(9), X(36)) ^ X(21) ^ X(42))
    inner = m(U(52), X(3)) ^ m(U(6), X(5)) ^ m(U(19), X(7)) ^ m(U(28), X(11)) ^ m(U(2), X(13))
    out ^= m(U(14), fs.trace_array(inner).astype(np.int64))
    return VectorialFunc(6, out, field=fs, name=f"blep u={u}")


def blep_fixture() -> VectorialFunc:
    """The frozen BLEP truth table shipped with the package."""
    text = resources.files("apnforge").joinpath("data/blep_n6.tt").read_text()
    return parse_text(text)


# ---------------------------------------------------------------- enumeration


def catalog_specs(n: int) -> list[FamilySpec]:
    """Every named APN instance at dimension n, one representative per exponent.

    Gold and Kasami take k in [1, n/2] with gcd(k, n) = 1; exponents already
    listed by an earlier family are skipped.
    """
    specs: list[FamilySpec] = []
    seen: set[int] = set()

    def add(spec):
        try:
            d = exponent(spec) % ((1 << n) - 1)
        except ConstraintError:
            return
        if d not in seen:
            seen.add(d)
            specs.append(spec)

    for k in range(1, n // 2 + 1):
        add(FamilySpec(Family.GOLD, n, k=k))
    for k in range(1, n // 2 + 1):
        add(FamilySpec(Family.KASAMI, n, k=k))
    for fam in (Family.WELCH, Family.NIHO, Family.INVERSE, Family.DOBBERTIN):
        add(FamilySpec(fam, n))
    if n == 6:
        specs.append(FamilySpec(Family.BLEP, 6))
    return specs


def catalog(n: int) -> list[VectorialFunc]:
    return [build(s) for s in catalog_specs(n)]


# ---------------------------------------------------------------- file formats

_HEADER = re.compile(r"^\s*n\s*=\s*(\d+)\s*(?:;\s*poly\s*:(.*))?$", re.S)
_TERM = re.compile(r"^([0-9a-fA-F]+)\s*\*\s*x\s*\^\s*(\d+)$|^([0-9a-fA-F]+)$|^x\s*\^\s*(\d+)$|^x$")


def parse(path, modulus: int | None = None) -> VectorialFunc:
    with open(path) as fh:
        return parse_text(fh.read(), modulus=modulus)


def parse_text(text: str, modulus: int | None = None) -> VectorialFunc:
    """Parse the truth-table or univariate-polynomial format."""
    stripped = text.strip()
    if not stripped:
        raise ValueError("empty input")
    first, _, rest = stripped.partition("\n")
    if "poly" in first:
        m = _HEADER.match(stripped)
        if m is None or m.group(2) is None:
            raise ValueError("malformed polynomial header, expected 'n=<int>; poly: <terms>'")
        return _parse_poly(int(m.group(1)), m.group(2), modulus)
    m = _HEADER.match(first)
    if m is None:
        raise ValueError(f"malformed header {first!r}, expected 'n=<int>'")
    n = int(m.group(1))
    tokens = rest.split()
    if len(tokens) != 1 << n:
        raise ValueError(f"expected {1 << n} entries for n={n}, got {len(tokens)}")
    try:
        values = [int(tok, 16) for tok in tokens]
    except ValueError as exc:
        raise ValueError(f"non-hexadecimal entry: {exc}") from None
    fs = FieldSpec.default(n, modulus) if 2 <= n <= 16 else None
    return VectorialFunc(n, np.array(values, dtype=np.int64), field=fs, name="file")


def _parse_poly(n: int, body: str, modulus: int | None) -> VectorialFunc:
    fs = FieldSpec.default(n, modulus)
    xs = np.arange(fs.size)
    out = np.zeros(fs.size, dtype=np.int64)
    for raw in body.split("+"):
        term = raw.strip()
        m = _TERM.match(term)
        if m is None:
            raise ValueError(f"malformed polynomial term {term!r}")
        if m.group(1) is not None:
            coeff, exp = int(m.group(1), 16), int(m.group(2))
        elif m.group(3) is not None:
            coeff, exp = int(m.group(3), 16), 0
        else:
            coeff, exp = 1, int(m.group(4)) if m.group(4) is not None else 1
        if coeff >= fs.size:
            raise ValueError(f"coefficient {coeff:#x} is not an element of GF(2^{n})")
        out ^= fs.mul_array(fs.pow_array(xs, exp), coeff)
    return VectorialFunc(n, out, field=fs, name="polynomial")


def serialize(F: VectorialFunc, dest=None) -> str:
    """Truth-table format; writes to ``dest`` (path or text stream) when given."""
    width = max(1, (F.n + 3) // 4)
    buf = io.StringIO()
    buf.write(f"n={F.n}\n")
    vals = [format(int(v), f"0{width}x") for v in F.table]
    for i in range(0, len(vals), 16):
        buf.write(" ".join(vals[i:i + 16]) + "\n")
    text = buf.getvalue()
    if dest is None:
        return text
    if isinstance(dest, (str, os.PathLike)):
        with open(dest, "w") as fh:
            fh.write(text)
    else:
        dest.write(text)
    return text
