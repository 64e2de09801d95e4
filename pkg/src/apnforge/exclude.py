"""Exclude multiplicities of Sidon sets, specialised to graphs of APN functions.

For a Sidon set S and p outside S, mult_S(p) counts unordered triples of
points of S summing to p.  For the graph of an APN function the whole table
follows from two Walsh-Hadamard transforms: the cube transform
C(a, b) = sum_{u,v} (-1)^(a.u + b.v) W_F(u, v)^3 equals 6 * 2^(2n) * mult
off the graph and 2^(2n) * (3 * 2^n - 2) on it.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .spectral import walsh_spectrum
from .vbf import VectorialFunc, graph_points, is_apn, shifted_derivative_image

ON_GRAPH = -1

# largest n whose full (a, b) table is materialised by default
FULL_TABLE_MAX_N = 13

# rows of the cube table reduced per chunk (bounds temporary memory)
_CHUNK_ROWS = 1 << 10


class NotAPNError(ValueError):
    pass


def _require_apn(F: VectorialFunc):
    if not is_apn(F):
        raise NotAPNError("function is not APN (some derivative takes a value more than twice), so its graph is not a Sidon set")


@dataclass(frozen=True, eq=False)
class SidonSet:
    ambient_dim: int
    points: frozenset

    def __post_init__(self):
        for p in self.points:
            if not 0 <= p < 1 << self.ambient_dim:
                raise ValueError(f"point {p} outside F_2^{self.ambient_dim}")

    @classmethod
    def of_graph(cls, F: VectorialFunc) -> "SidonSet":
        return cls(2 * F.n, frozenset(int(p) for p in graph_points(F)))

    def array(self) -> np.ndarray:
        return np.array(sorted(self.points), dtype=np.int64)

    def indicator(self) -> np.ndarray:
        out = np.zeros(1 << self.ambient_dim, dtype=bool)
        out[self.array()] = True
        return out


@dataclass(frozen=True, eq=False)
class ExcludeSpectrum:
    """mult[a, b] is the exclude multiplicity at (a, b), or ON_GRAPH when b = F(a).

    ``mult`` is None when only the histogram was accumulated.
    """

    n: int
    mult: np.ndarray | None
    histogram: dict
    e_min: int

    @property
    def e_max(self) -> int:
        return max(self.histogram)

    @property
    def total(self) -> int:
        """sum_k k * m_k, the number of triples of graph points (all sum off the graph)."""
        return sum(k * m for k, m in self.histogram.items())

    def at(self, a: int, b: int) -> int:
        if self.mult is None:
            raise ValueError("spectrum was computed in histogram-only mode")
        return int(self.mult[a, b])


@dataclass(frozen=True)
class PiInvariant:
    """per_beta[beta] maps each value |Pi^beta(b)| to how many b attain it."""

    per_beta: dict
    union: frozenset
    m_F: int


def cube_transform(F: VectorialFunc) -> np.ndarray:
    """C(a, b) as an int64 (2^n, 2^n) array.

    The l1 norm of W^3 is at most 2^(4n), so int64 never overflows for n <= 15.
    """
    n = F.n
    W = walsh_spectrum(F).values
    mags = np.bincount(np.abs(W).ravel(), minlength=1)
    l1 = sum(int(k) ** 3 * int(c) for k, c in enumerate(mags) if c)
    if l1 > np.iinfo(np.int64).max:
        raise OverflowError(f"cube transform of an n={n} function exceeds int64")
    cube = W.astype(np.int64).ravel()
    cube *= cube * cube
    _kernels.fwht(cube)
    return cube.reshape(F.size, F.size)


def _reduce_cube(n: int, cube: np.ndarray, on_graph: np.ndarray, out, hist: Counter):
    """Divide a block of cube values, check integrality, update histogram.

    ``on_graph`` masks the graph points inside this block.
    """
    scale = 6 << (2 * n)
    q, r = np.divmod(cube, scale)
    off = ~on_graph
    if np.any(r[off]):
        raise ArithmeticError("cube transform not divisible by 6 * 2^(2n) off the graph")
    on_val = (1 << (2 * n)) * (3 * (1 << n) - 2)
    if np.any(cube[on_graph] != on_val):
        raise ArithmeticError("unexpected cube value on the graph")
    vals, counts = np.unique(q[off], return_counts=True)
    for v, c in zip(vals.tolist(), counts.tolist()):
        hist[v] += c
    if out is not None:
        q[on_graph] = ON_GRAPH
        out[...] = q


def exclude_spectrum_fast(
    F: VectorialFunc,
    histogram_only: bool = False,
    workers: int | None = None,
    split: int | None = None,
) -> ExcludeSpectrum:
    """Exclude spectrum of the graph of an APN function from the cube transform.

    With ``histogram_only`` the (a, b) plane is processed in 2^split strips
    and never materialised; ``split`` defaults to keep each strip at or below
    2^27 entries.
    """
    _require_apn(F)
    _kernels.set_workers(workers)
    if histogram_only:
        if split is None:
            split = max(0, 2 * F.n - 27)
        return _streamed(F, split)
    key = "exclude"
    if key not in F._cache:
        cube = cube_transform(F)
        N = F.size
        mult = np.empty((N, N), dtype=np.int32)
        hist = Counter()
        tab = np.asarray(F.table)
        for start in range(0, N, _CHUNK_ROWS):
            stop = min(N, start + _CHUNK_ROWS)
            rows = np.arange(start, stop)
            on = np.zeros((stop - start, N), dtype=bool)
            on[rows - start, tab[rows]] = True
            _reduce_cube(F.n, cube[start:stop], on, mult[start:stop], hist)
        del cube
        mult.setflags(write=False)
        F._cache[key] = _finish(F.n, mult, hist)
    return F._cache[key]


def _finish(n, mult, hist) -> ExcludeSpectrum:
    histogram = dict(sorted(hist.items()))
    return ExcludeSpectrum(n, mult, histogram, min(histogram))


def _streamed(F: VectorialFunc, split: int) -> ExcludeSpectrum:
    n = F.n
    if not 0 <= split <= n:
        raise ValueError(f"split must lie in [0, {n}]")
    N = F.size
    low = N >> split
    table = np.ascontiguousarray(F.table, dtype=np.int64)
    block = np.empty((N, low), dtype=np.int64)
    # multiplicities never exceed (2^n - 1) / 3
    counts = np.zeros(N // 3 + 1, dtype=np.int64)
    for t in range(1 << split):
        _kernels.cube_block_columns(table, n, split, t, block)
        _kernels.fwht_axis0(block)
        # block[b, a_lo] is C(a, b) for a = t * low + a_lo
        code = _kernels.reduce_strip(block, table, t * low, n, counts)
        if code:
            raise ArithmeticError(_STRIP_ERRORS[code])
    hist = Counter({k: int(c) for k, c in enumerate(counts.tolist()) if c})
    return _finish(n, None, hist)


_STRIP_ERRORS = {
    1: "cube transform not divisible by 6 * 2^(2n) off the graph",
    2: "unexpected cube value on the graph",
    3: "multiplicity above (2^n - 1) / 3",
}


# ---------------------------------------------------------------- oracles


def exclude_mult_oracle(S: SidonSet, p: int) -> int:
    """Brute force: count pairs x < y of S with z = x + y + p in S and z > y."""
    return int(exclude_mults_oracle(S, [p])[0])


def exclude_mults_oracle(S: SidonSet, points) -> np.ndarray:
    """exclude_mult_oracle at many points, sharing the pair enumeration."""
    member = S.indicator()
    points = np.asarray(points, dtype=np.int64)
    if np.any(member[points]):
        raise ValueError(f"point {int(points[member[points]][0])} lies in the set")
    pts = S.array()
    i, j = np.triu_indices(pts.size, k=1)
    xy, y = pts[i] ^ pts[j], pts[j]
    out = np.empty(points.size, dtype=np.int64)
    for idx, p in enumerate(points.tolist()):
        z = xy ^ p
        out[idx] = np.count_nonzero(member[z] & (z > y))
    return out


def exclude_table_oracle(S: SidonSet) -> np.ndarray:
    """Multiplicity of every point of the ambient space by sweeping all triples.

    Points of S get ON_GRAPH.  Cost is |S|^3 / 6, so keep |S| <= 2^8.
    """
    pts = S.array()
    m = pts.size
    counts = np.zeros(1 << S.ambient_dim, dtype=np.int64)
    for i in range(m - 2):
        rest = pts[i + 1:]
        j, k = np.triu_indices(rest.size, k=1)
        counts += np.bincount(pts[i] ^ rest[j] ^ rest[k], minlength=counts.size)
    counts[pts] = ON_GRAPH
    return counts


def oracle_spectrum(F: VectorialFunc) -> ExcludeSpectrum:
    """Exclude spectrum of the graph from the triple sweep (no Walsh transforms)."""
    S = SidonSet.of_graph(F)
    mult = exclude_table_oracle(S).reshape(F.size, F.size).astype(np.int32)
    off = mult[mult != ON_GRAPH]
    hist = Counter(dict(zip(*(a.tolist() for a in np.unique(off, return_counts=True)))))
    mult.setflags(write=False)
    return _finish(F.n, mult, hist)


def verify_sidon(S: SidonSet) -> bool:
    """No four distinct points sum to zero, i.e. all pairwise sums are distinct."""
    pts = S.array()
    i, j = np.triu_indices(pts.size, k=1)
    sums = pts[i] ^ pts[j]
    return np.unique(sums).size == sums.size


def is_maximal_sidon(S) -> bool:
    """Sidon and every outside point has positive exclude multiplicity.

    Accepts a SidonSet (brute force) or an APN function (its graph, via the
    cube transform).
    """
    if isinstance(S, VectorialFunc):
        if not is_apn(S):
            return False
        return exclude_spectrum_fast(S).e_min > 0
    if not verify_sidon(S):
        return False
    tab = exclude_table_oracle(S)
    return bool(np.all(tab[tab != ON_GRAPH] > 0))


# ---------------------------------------------------------------- Pi invariant


def pi_invariant(F: VectorialFunc) -> PiInvariant:
    """Pi invariant read off the exclude spectrum: 3 * mult off the graph, 2^n on it."""
    spec = exclude_spectrum_fast(F)
    per_beta = {}
    for beta in range(F.size):
        row = np.asarray(spec.mult[beta]).astype(np.int64) * 3
        row[F.table[beta]] = F.size
        vals, counts = np.unique(row, return_counts=True)
        per_beta[beta] = dict(zip(vals.tolist(), counts.tolist()))
    union = frozenset(v for d in per_beta.values() for v in d)
    return PiInvariant(per_beta, union, min(union))


def pi_sizes_direct(F: VectorialFunc, beta: int) -> np.ndarray:
    """|Pi^beta(b)| for every b, as #{a : b in image of x -> F(x) + F(x+a) + F(a+beta)}."""
    out = np.zeros(F.size, dtype=np.int64)
    for a in range(F.size):
        img = np.fromiter(shifted_derivative_image(F, a, beta), dtype=np.int64)
        out[img] += 1
    return out


def pi_invariant_direct(F: VectorialFunc, betas=None) -> PiInvariant:
    """Pi invariant from shifted-derivative images alone (O(2^(3n)); an oracle)."""
    per_beta = {}
    for beta in range(F.size) if betas is None else betas:
        vals, counts = np.unique(pi_sizes_direct(F, beta), return_counts=True)
        per_beta[beta] = dict(zip(vals.tolist(), counts.tolist()))
    union = frozenset(v for d in per_beta.values() for v in d)
    return PiInvariant(per_beta, union, min(union))


def distance_lower_bound_from_spectrum(F: VectorialFunc) -> int:
    """e_min + 1, a lower bound on d(F, G) for any APN G != F."""
    spec = exclude_spectrum_fast(F, histogram_only=F.n > FULL_TABLE_MAX_N)
    bound = spec.e_min + 1
    # the same bound through the Pi invariant minimum m_F = 3 e_min
    m_F = min(3 * spec.e_min, F.size)
    if math.ceil(m_F / 3) + 1 != bound:
        raise AssertionError("Pi-invariant bound disagrees with e_min + 1")
    return bound


def triple_count(n: int) -> int:
    """Number of unordered triples of graph points, which all sum off the graph."""
    return math.comb(1 << n, 3)
