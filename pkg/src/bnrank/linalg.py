"""Exact integer and rational matrix routines.

Matrices are plain lists of rows.  Integer routines never leave ``int``;
rational ones use :class:`fractions.Fraction`.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

IntMatrix = List[List[int]]
RatMatrix = List[List[Fraction]]


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    a = [list(row) for row in matrix]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # exact: Sylvester's identity guarantees divisibility
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def smith_invariants(matrix: Sequence[Sequence[int]]) -> List[int]:
    """Diagonal of the Smith normal form, d1 | d2 | ... (zeros last).

    Plain row/column reduction with gcd pivots; only the diagonal is
    returned since no caller needs the transforms.
    """
    a = [list(row) for row in matrix]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    diag: List[int] = []
    t = 0
    while t < min(rows, cols):
        nonzero = [(abs(a[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if a[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        a[t], a[pi] = a[pi], a[t]
        for row in a:
            row[t], row[pj] = row[pj], row[t]
        while True:
            done = True
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    for j in range(t, cols):
                        a[i][j] -= q * a[t][j]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        done = False
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    for i in range(t, rows):
                        a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        done = False
            if not done:
                continue
            # divisibility: pivot must divide the whole remaining block
            bad = next(
                ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if a[i][j] % a[t][t]),
                None,
            )
            if bad is None:
                break
            i, _ = bad
            for j in range(t, cols):
                a[t][j] += a[i][j]
        diag.append(abs(a[t][t]))
        t += 1
    diag.extend([0] * (min(rows, cols) - len(diag)))
    return diag


def rational_inverse(matrix: Sequence[Sequence[int | Fraction]]) -> RatMatrix:
    """Gauss-Jordan inverse over the rationals; raises ValueError if singular."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def rational_det(matrix: Sequence[Sequence[int | Fraction]]) -> Fraction:
    a = [[Fraction(x) for x in row] for row in matrix]
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            f = a[r][col] / a[col][col]
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return det


def mat_vec(matrix: Sequence[Sequence], vec: Sequence) -> list:
    return [sum(m * v for m, v in zip(row, vec)) for row in matrix]


def vec_mat(vec: Sequence, matrix: Sequence[Sequence]) -> list:
    """Row vector times matrix, i.e. the combination sum_i vec[i] * matrix[i]."""
    out = [0] * len(matrix[0])
    for c, row in zip(vec, matrix):
        if c:
            for j, x in enumerate(row):
                out[j] += c * x
    return out


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list:
    return [vec_mat(row, b) for row in a]


def transpose(a: Sequence[Sequence]) -> list:
    return [list(col) for col in zip(*a)]


def hermite_rows(basis: Sequence[Sequence[int]]) -> IntMatrix:
    """Row echelon basis of the lattice spanned by ``basis``.

    Assumes the leading ``len(basis)`` columns of the basis form a
    nonsingular block, so row ``i`` of the result has zeros before column
    ``i`` and a positive pivot at column ``i``.  Entries above each pivot
    are reduced into ``[0, pivot)``.
    """
    a = [list(row) for row in basis]
    k = len(a)
    for col in range(k):
        # Euclid on the column below the diagonal
        while True:
            live = [r for r in range(col, k) if a[r][col] != 0]
            if not live:
                raise ValueError("leading block is singular")
            r0 = min(live, key=lambda r: abs(a[r][col]))
            a[col], a[r0] = a[r0], a[col]
            cleared = True
            for r in range(col + 1, k):
                if a[r][col]:
                    q = a[r][col] // a[col][col]
                    a[r] = [x - q * y for x, y in zip(a[r], a[col])]
                    if a[r][col]:
                        cleared = False
            if cleared:
                break
        if a[col][col] < 0:
            a[col] = [-x for x in a[col]]
        for r in range(col):
            q = a[r][col] // a[col][col]
            if q:
                a[r] = [x - q * y for x, y in zip(a[r], a[col])]
    return a
