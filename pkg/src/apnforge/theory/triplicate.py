"""3-to-1 plateaued functions: partial difference set parameters and the two-valued spectrum."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..exclude import exclude_spectrum_fast
from ..spectral import plateau_profile, walsh_spectrum
from ..vbf import VectorialFunc, is_3to1


def alpha(n: int) -> int:
    _require_even(n)
    num = (1 << n) + (-2) ** (n // 2 + 1) - 2
    return num // 6


def beta(n: int) -> int:
    _require_even(n)
    num = (1 << n) + (-2) ** (n // 2) - 2
    return num // 6


def _require_even(n):
    if n < 4 or n % 2:
        raise ValueError(f"needs even n >= 4, got n={n}")


@dataclass(frozen=True)
class PdsParams:
    v: int
    k: int
    lam: int
    mu: int
    alpha_n: int
    beta_n: int

    @property
    def alpha_frequency(self) -> int:
        return self.v * (self.v - 1) // 3

    @property
    def beta_frequency(self) -> int:
        return 2 * self.v * (self.v - 1) // 3


def pds_params(n: int) -> PdsParams:
    a, b = alpha(n), beta(n)
    N = 1 << n
    return PdsParams(N, (N - 1) // 3, 2 * (a - 1) // 3, 2 * b // 3, a, b)


def difference_counts(D: np.ndarray, n: int) -> np.ndarray:
    """counts[g] = #{(x, y) in D^2 : x != y, x + y = g}."""
    sums = (D[:, None] ^ D[None, :]).ravel()
    counts = np.bincount(sums, minlength=1 << n)
    counts[0] = 0
    return counts


def is_pds(D: np.ndarray, n: int, lam: int, mu: int) -> bool:
    counts = difference_counts(D, n)
    inside = np.zeros(1 << n, dtype=bool)
    inside[D] = True
    inside[0] = False
    outside = ~inside
    outside[0] = False
    return bool(np.all(counts[inside] == lam) and np.all(counts[outside] == mu))


def check_pds(F: VectorialFunc) -> bool:
    """Verify the difference-set structure of im F' minus 0 and the two-valued exclude spectrum.

    F' = F + F(0); hypotheses (n even >= 4, plateaued, 3-to-1) raise if unmet.
    """
    n = F.n
    params = pds_params(n)
    if not is_3to1(F):
        raise ValueError("function is not 3-to-1 (one point with a single preimage, all others three)")
    G = F.translated()
    if not plateau_profile(walsh_spectrum(G)).is_plateaued:
        raise ValueError("function is not plateaued")
    image = np.unique(G.table)
    if 0 not in image:
        raise ValueError("translated function does not vanish at 0")
    D = image[image != 0]
    if D.size != params.k or not is_pds(D, n, params.lam, params.mu):
        return False
    spec = exclude_spectrum_fast(G)
    expected = {params.alpha_n: params.alpha_frequency, params.beta_n: params.beta_frequency}
    if spec.histogram != dict(sorted(expected.items())):
        return False
    row = np.asarray(spec.mult[0], dtype=np.int64)
    in_image = np.zeros(1 << n, dtype=bool)
    in_image[D] = True
    bs = np.arange(1, 1 << n)
    want = np.where(in_image[bs], params.alpha_n, params.beta_n)
    return bool(np.array_equal(row[bs], want))


def three_to_one_bound(n: int) -> int:
    """Distance bound min(alpha(n), beta(n)) + 1 for 3-to-1 plateaued functions, in closed form."""
    _require_even(n)
    if n % 4 == 0:
        return ((1 << (n - 1)) - (1 << (n // 2)) + 2) // 3
    return ((1 << (n - 1)) - (1 << (n // 2 - 1)) + 2) // 3
