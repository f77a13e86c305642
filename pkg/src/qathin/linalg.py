"""Exact linear algebra: GF(2) ranks on bit-packed rows, signatures of
symmetric rational forms by congruence, and Smith normal form over Z."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

__all__ = ["gf2_rank", "symmetric_signature", "smith_normal_form", "integer_det"]


def gf2_rank(rows: List[int]) -> int:
    """Rank over GF(2); each row is an int bitmask."""
    rank = 0
    pivots: list[int] = []
    for row in rows:
        for p in pivots:
            row = min(row, row ^ p)
        if row:
            pivots.append(row)
            # keep pivots sorted by leading bit, highest first
            pivots.sort(reverse=True)
            rank += 1
    return rank


def symmetric_signature(matrix: Sequence[Sequence]) -> int:
    """Signature of a symmetric matrix with exact rational arithmetic.

    Congruence diagonalization: split off nonzero diagonal pivots; a zero
    diagonal with a nonzero off-diagonal entry is a hyperbolic pair and
    contributes nothing.
    """
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    for row in m:
        if len(row) != n:
            raise ValueError("matrix must be square")
    sig = 0
    live = list(range(n))
    while live:
        pivot = next((i for i in live if m[i][i] != 0), None)
        if pivot is not None:
            a = m[pivot][pivot]
            sig += 1 if a > 0 else -1
            rest = [i for i in live if i != pivot]
            for i in rest:
                ci = m[pivot][i] / a
                if ci == 0:
                    continue
                for j in rest:
                    m[i][j] -= ci * m[pivot][j]
            live = rest
            continue
        pair = None
        for i in live:
            for j in live:
                if i < j and m[i][j] != 0:
                    pair = (i, j)
                    break
            if pair:
                break
        if pair is None:
            break  # remaining block is zero
        i, j = pair
        b = m[i][j]
        rest = [k for k in live if k not in (i, j)]
        # Schur complement of the hyperbolic block [[0, b], [b, 0]]
        for r in rest:
            u, v = m[r][i], m[r][j]
            if u == 0 and v == 0:
                continue
            for c in rest:
                m[r][c] -= (u * m[j][c] + v * m[i][c]) / b
        live = rest
    return sig


def integer_det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix (fraction-free Bareiss)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def smith_normal_form(matrix: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero diagonal entries of the Smith normal form, as positive ints
    in divisibility order.  Row/column operations only; exact."""
    m = [list(map(int, row)) for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    divisors: list[int] = []
    top = 0
    while top < rows and top < cols:
        # locate smallest nonzero entry in the remaining block
        best = None
        for i in range(top, rows):
            for j in range(top, cols):
                v = abs(m[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        if best is None:
            break
        _, bi, bj = best
        m[top], m[bi] = m[bi], m[top]
        for row in m:
            row[top], row[bj] = row[bj], row[top]
        while True:
            pivot = m[top][top]
            done = True
            for i in range(top + 1, rows):
                q = m[i][top] // pivot
                if m[i][top] % pivot:
                    done = False
                for j in range(top, cols):
                    m[i][j] -= q * m[top][j]
            for j in range(top + 1, cols):
                q = m[top][j] // pivot
                if m[top][j] % pivot:
                    done = False
                for i in range(top, rows):
                    m[i][j] -= q * m[i][top]
            if done:
                leftover = any(m[i][top] for i in range(top + 1, rows)) or any(
                    m[top][j] for j in range(top + 1, cols)
                )
                if not leftover:
                    break
            # re-pick the smallest pivot in the current column/row remainder
            best = None
            for i in range(top, rows):
                for j in range(top, cols):
                    v = abs(m[i][j])
                    if v and (best is None or v < best[0]):
                        best = (v, i, j)
            _, bi, bj = best
            m[top], m[bi] = m[bi], m[top]
            for row in m:
                row[top], row[bj] = row[bj], row[top]
        # pivot must divide the rest of the block for true SNF
        pivot = abs(m[top][top])
        bad = None
        for i in range(top + 1, rows):
            for j in range(top + 1, cols):
                if m[i][j] % pivot:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            for j in range(top, cols):
                m[top][j] += m[bad][j]
            continue
        divisors.append(pivot)
        top += 1
    return divisors
