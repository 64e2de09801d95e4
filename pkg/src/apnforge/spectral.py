"""Walsh spectra, plateau profiles and autocorrelation."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _kernels
from . import field as gf
from .vbf import BooleanFunc, VectorialFunc, graph_indicator


def fwht_in_place(data: np.ndarray, check: bool = True) -> np.ndarray:
    """data[u] <- sum_x (-1)^(x.u) data[x], in place; returns ``data``.

    With ``check`` the l1 norm of the input is compared against the dtype
    range first: every intermediate butterfly is bounded by it, so passing
    the check rules out overflow.
    """
    if not isinstance(data, np.ndarray) or data.ndim != 1:
        raise TypeError("expected a 1-D numpy array")
    if not np.issubdtype(data.dtype, np.signedinteger):
        raise TypeError(f"expected a signed integer dtype, got {data.dtype}")
    size = data.size
    if size == 0 or size & (size - 1):
        raise ValueError(f"length must be a power of two, got {size}")
    if check:
        l1 = _l1(data)
        if l1 > np.iinfo(data.dtype).max:
            raise OverflowError(f"l1 norm {l1} exceeds the {data.dtype} accumulator")
    # the l1 bound may be loose; without it the result is still exact modulo 2^bits
    _kernels.fwht(data)
    return data


def _l1(data):
    # python ints: the sum of int64 magnitudes may itself exceed int64
    cheap = int(np.abs(data).max()) * data.size
    if cheap <= np.iinfo(data.dtype).max:
        return cheap
    vals, counts = np.unique(np.abs(data.astype(np.int64)), return_counts=True)
    return sum(int(v) * int(c) for v, c in zip(vals, counts))


@dataclass(frozen=True, eq=False)
class WalshSpectrum:
    """values[u, v] = W_F(u, v) = sum_x (-1)^(u.x + v.F(x))."""

    n: int
    values: np.ndarray

    @property
    def linearity(self) -> int:
        """max |W_F(u, v)| over v != 0 (the v = 0 column is the trivial character)."""
        return int(np.abs(self.values[:, 1:]).max())

    @property
    def nonlinearity(self) -> int:
        return (1 << (self.n - 1)) - self.linearity // 2

    def column(self, v: int) -> np.ndarray:
        return self.values[:, v]


@dataclass(frozen=True, eq=False)
class PlateauProfile:
    """Per-component amplitude data.

    amplitudes[v] is the largest |W_F(u, v)|; for a plateaued F this is the
    common magnitude lambda_v of all nonzero values in column v.
    """

    n: int
    is_plateaued: bool
    amplitudes: np.ndarray
    bent_components: frozenset
    single_amplitude: bool

    def amplitude_squares(self) -> np.ndarray:
        return self.amplitudes.astype(np.int64) ** 2


def walsh_spectrum(F: VectorialFunc) -> WalshSpectrum:
    """Transform of the graph indicator; int32 suffices since |W| <= 2^n <= 2^16."""
    if "walsh" not in F._cache:
        ind = graph_indicator(F, dtype=np.int32)
        fwht_in_place(ind, check=False)
        vals = ind.reshape(F.size, F.size)
        vals.setflags(write=False)
        F._cache["walsh"] = WalshSpectrum(F.n, vals)
    return F._cache["walsh"]


def walsh_direct(F: VectorialFunc, u: int, v: int) -> int:
    """Single Walsh coefficient by summation (oracle)."""
    xs = np.arange(F.size)
    signs = gf.parity((xs & u) ^ (F.table & v))
    return int(F.size - 2 * int(signs.sum()))


def boolean_walsh(f: BooleanFunc) -> np.ndarray:
    vals = 1 - 2 * f.bits.astype(np.int64)
    return fwht_in_place(vals, check=False)


def plateau_profile(spectrum: WalshSpectrum) -> PlateauProfile:
    n = spectrum.n
    mags = np.abs(spectrum.values)
    amp = mags.max(axis=0)
    if np.any(amp == 0):
        raise AssertionError("a component has an all-zero spectrum, impossible by Parseval")
    plateaued = bool(np.all((mags == 0) | (mags == amp[None, :])))
    nz = amp[1:]
    single = bool(plateaued and np.all(nz == nz[0]))
    bent = frozenset()
    if n % 2 == 0:
        half = 1 << (n // 2)
        is_bent = np.all(mags == half, axis=0)
        is_bent[0] = False
        bent = frozenset(int(v) for v in np.nonzero(is_bent)[0])
    amp = amp.astype(np.int64)
    amp.setflags(write=False)
    return PlateauProfile(n, plateaued, amp, bent, single)


def is_ab(spectrum: WalshSpectrum) -> bool:
    """All values with v != 0 in {0, +-2^((n+1)/2)}; never true for even n."""
    n = spectrum.n
    if n % 2 == 0:
        return False
    mags = np.abs(spectrum.values[:, 1:])
    return bool(np.all((mags == 0) | (mags == 1 << ((n + 1) // 2))))


def is_plateaued(spectrum: WalshSpectrum) -> bool:
    return plateau_profile(spectrum).is_plateaued


def power_moment(spectrum: WalshSpectrum, k: int) -> int:
    """Exact sum over (u, v) of W_F(u, v)^k, accumulated in Python ints."""
    vals, counts = np.unique(spectrum.values, return_counts=True)
    return sum(int(v) ** k * int(c) for v, c in zip(vals, counts))


def fourth_moment(spectrum: WalshSpectrum) -> int:
    return power_moment(spectrum, 4)


def apn_fourth_moment(n: int) -> int:
    """The value of the fourth moment exactly when F is APN."""
    return (1 << (2 * n)) * (3 * (1 << (2 * n)) - (1 << (n + 1)))


def is_apn_spectral(spectrum: WalshSpectrum) -> bool:
    return fourth_moment(spectrum) == apn_fourth_moment(spectrum.n)


def parseval_holds(spectrum: WalshSpectrum) -> bool:
    sq = (spectrum.values.astype(np.int64) ** 2).sum(axis=0)
    return bool(np.all(sq == 1 << (2 * spectrum.n)))


def autocorrelation(f: BooleanFunc, shift: int) -> int:
    """sum_x (-1)^(f(x) + f(x + shift)) = 2^n_in - 2 wt(D_shift f)."""
    bits = f.bits
    xs = np.arange(bits.size)
    return int(bits.size - 2 * int(np.count_nonzero(bits != bits[xs ^ shift])))


def autocorrelation_spectrum(f: BooleanFunc) -> np.ndarray:
    """All autocorrelation values at once: the transform of the squared Walsh values, over 2^n_in."""
    w = boolean_walsh(f)
    sq = w * w
    fwht_in_place(sq)
    return sq >> f.n_in


def _require_plateaued(profile: PlateauProfile):
    if not profile.is_plateaued:
        raise ValueError("function is not plateaued")


def amplitude_hyperplane_sum(profile: PlateauProfile, c: int) -> int:
    """sum of lambda_v^2 over v with v.c = 0."""
    _require_plateaued(profile)
    if c == 0:
        raise ValueError("c must be nonzero")
    vs = np.arange(profile.amplitudes.size)
    mask = gf.parity(vs & c) == 0
    return int(profile.amplitude_squares()[mask].sum())


def amplitude_signed_sum(profile: PlateauProfile, c: int) -> int:
    """sum_v (-1)^(v.c) lambda_v^2."""
    _require_plateaued(profile)
    vs = np.arange(profile.amplitudes.size)
    signs = 1 - 2 * gf.parity(vs & c).astype(np.int64)
    return int((signs * profile.amplitude_squares()).sum())
