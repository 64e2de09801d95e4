"""Compiled inner loops.  Everything here works on plain numpy arrays."""

import numba
import numpy as np
from numba import njit, prange

# butterflies below this span run block-by-block while the block is cache resident
_BLOCK = 1 << 12


@njit(cache=True, parallel=True)
def fwht(a):
    """Unnormalised Walsh-Hadamard transform of a 1-D array, in place."""
    n = a.size
    blk = min(n, _BLOCK)
    for start in prange(n // blk):
        base = start * blk
        h = 1
        while h < blk:
            for i in range(base, base + blk, 2 * h):
                for j in range(i, i + h):
                    x = a[j]
                    y = a[j + h]
                    a[j] = x + y
                    a[j + h] = x - y
            h *= 2
    h = blk
    while h < n:
        for i in range(0, n, 2 * h):
            for j in prange(i, i + h):
                x = a[j]
                y = a[j + h]
                a[j] = x + y
                a[j + h] = x - y
        h *= 2


@njit(cache=True)
def _fwht_serial(a):
    n = a.size
    h = 1
    while h < n:
        for i in range(0, n, 2 * h):
            for j in range(i, i + h):
                x = a[j]
                y = a[j + h]
                a[j] = x + y
                a[j + h] = x - y
        h *= 2


@njit(cache=True, parallel=True)
def fwht_axis0(a):
    """Transform every column of a C-contiguous 2-D array, in place."""
    rows, cols = a.shape
    h = 1
    while h < rows:
        for i in range(0, rows, 2 * h):
            for j in range(i, i + h):
                for c in prange(cols):
                    x = a[j, c]
                    y = a[j + h, c]
                    a[j, c] = x + y
                    a[j + h, c] = x - y
        h *= 2


@njit(cache=True)
def _parity(x):
    x ^= x >> 16
    x ^= x >> 8
    x ^= x >> 4
    x ^= x >> 2
    x ^= x >> 1
    return x & 1


@njit(cache=True, parallel=True)
def cube_block_columns(table, n, split, block, out):
    """Partial cube transform for one block of rows of the (a, b) plane.

    For every v this computes the column W(., v) of the Walsh spectrum from
    scratch, cubes it, folds the top ``split`` bits of u against the block
    index and transforms the remaining bits, writing
    out[v, a_lo] = sum_u (-1)^(a.u) W(u, v)^3 for a = block * 2^(n - split) + a_lo.
    """
    size = 1 << n
    low = 1 << (n - split)
    for v in prange(size):
        col = np.empty(size, dtype=np.int64)
        for x in range(size):
            col[x] = 1 - 2 * _parity(v & table[x])
        _fwht_serial(col)
        acc = np.zeros(low, dtype=np.int64)
        for hi in range(1 << split):
            sign = 1 - 2 * _parity(hi & block)
            off = hi * low
            for lo in range(low):
                w = col[off + lo]
                acc[lo] += sign * w * w * w
        _fwht_serial(acc)
        for lo in range(low):
            out[v, lo] = acc[lo]


@njit(cache=True)
def reduce_strip(block, table, a0, n, hist):
    """Histogram update for one strip from the streamed path, without temporaries.

    block[b, a_lo] holds C(a0 + a_lo, b).  Off-graph values are divided by
    6 * 2^(2n) and counted in ``hist``.  Returns 0 on success, 1 if an
    off-graph value is not divisible, 2 if an on-graph value is wrong and 3 if
    a multiplicity falls outside ``hist``.
    """
    rows, cols = block.shape
    scale = np.int64(6) << (2 * n)
    on_val = (np.int64(1) << (2 * n)) * (3 * (np.int64(1) << n) - 2)
    for c in range(cols):
        fa = table[a0 + c]
        for b in range(rows):
            x = block[b, c]
            if b == fa:
                if x != on_val:
                    return 2
                continue
            if x % scale != 0:
                return 1
            q = x // scale
            if q < 0 or q >= hist.size:
                return 3
            hist[q] += 1
    return 0


def set_workers(workers):
    """Clamp and apply a worker count for the parallel kernels."""
    if workers is None:
        return
    numba.set_num_threads(max(1, min(int(workers), numba.config.NUMBA_NUM_THREADS)))
