"""Linear algebra over F_2 on vectors packed into Python ints."""

from __future__ import annotations


def xor_basis(vectors) -> list[int]:
    """Echelon basis (distinct leading bits) of the span of ``vectors``."""
    basis: list[int] = []
    for v in vectors:
        v = int(v)
        for b in basis:
            v = min(v, v ^ b)
        if v:
            basis.append(v)
            basis.sort(reverse=True)
    return basis


def rank(vectors) -> int:
    return len(xor_basis(vectors))


def rref(rows, n: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form of bit rows of width n, with pivot bit positions."""
    rows = [int(r) for r in rows]
    pivots = []
    r = 0
    for bit in range(n - 1, -1, -1):
        mask = 1 << bit
        sel = next((i for i in range(r, len(rows)) if rows[i] & mask), None)
        if sel is None:
            continue
        rows[r], rows[sel] = rows[sel], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i] & mask:
                rows[i] ^= rows[r]
        pivots.append(bit)
        r += 1
    return rows[:r], pivots


def nullspace(rows, n: int) -> list[int]:
    """Basis of {x in F_2^n : x . r = 0 for every row r}."""
    red, pivots = rref(rows, n)
    out = []
    for free in range(n):
        if free in pivots:
            continue
        x = 1 << free
        for row, p in zip(red, pivots):
            if row >> free & 1:
                x |= 1 << p
        out.append(x)
    return out
