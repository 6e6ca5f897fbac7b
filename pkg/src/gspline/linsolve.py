"""Exact dense linear algebra over Q.

Matrices are plain row-major sequences of ints/Fractions.  Elimination is
fraction-free (Bareiss): each row is scaled to integers, and every update
divides exactly by the previous pivot, so intermediate entries stay minors of
the input instead of growing as nested fractions.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

from .algebra import Poly

RatMatrix = Sequence[Sequence["int | Fraction"]]


class LinearAlgebraError(ValueError):
    pass


def _integer_rows(M: RatMatrix, ncols: int) -> list[list[int]]:
    rows = []
    for row in M:
        if len(row) != ncols:
            raise LinearAlgebraError("ragged matrix")
        if all(type(v) is int for v in row):
            rows.append(list(row))
            continue
        row = [v if type(v) is int else Fraction(v) for v in row]
        den = math.lcm(*(1 if type(v) is int else v.denominator for v in row))
        rows.append([v * den if type(v) is int else v.numerator * (den // v.denominator)
                     for v in row])
    return rows


def _shape(M: RatMatrix, ncols: int | None = None) -> tuple[int, int]:
    nrows = len(M)
    if ncols is None:
        ncols = len(M[0]) if nrows else 0
    return nrows, ncols


def bareiss_echelon(rows: list[list[int]], ncols: int,
                    stop_col: int | None = None) -> list[int]:
    """In-place fraction-free row echelon form of an integer matrix.

    Returns the pivot columns; rows ``0..len(pivots)-1`` are the pivot rows.
    Pivot search only considers columns below ``stop_col`` (used to keep an
    augmented column out of the pivot set).
    """
    nrows = len(rows)
    limit = ncols if stop_col is None else stop_col
    pivots: list[int] = []
    prev = 1
    r = 0
    for c in range(limit):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if rows[i][c]), None)
        if p is None:
            continue
        if p != r:
            rows[r], rows[p] = rows[p], rows[r]
        piv_row = rows[r]
        piv = piv_row[c]
        for i in range(r + 1, nrows):
            row = rows[i]
            f = row[c]
            if f:
                for j in range(c + 1, ncols):
                    row[j] = (piv * row[j] - f * piv_row[j]) // prev
            elif piv != prev:
                for j in range(c + 1, ncols):
                    if row[j]:
                        row[j] = (piv * row[j]) // prev
            row[c] = 0
        prev = piv
        pivots.append(c)
        r += 1
    return pivots


def rank(M: RatMatrix, ncols: int | None = None) -> int:
    nrows, ncols = _shape(M, ncols)
    if not nrows or not ncols:
        return 0
    rows = _integer_rows(M, ncols)
    return len(bareiss_echelon(rows, ncols))


def determinant(M: RatMatrix) -> Fraction:
    n = len(M)
    if any(len(row) != n for row in M):
        raise LinearAlgebraError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    rows = []
    scale = Fraction(1)
    for row in M:
        row = [Fraction(v) for v in row]
        den = math.lcm(*(v.denominator for v in row))
        scale /= den
        rows.append([int(v * den) for v in row])
    # Track swaps by running elimination on a copy with explicit bookkeeping.
    sign = 1
    prev = 1
    for k in range(n):
        p = next((i for i in range(k, n) if rows[i][k]), None)
        if p is None:
            return Fraction(0)
        if p != k:
            rows[k], rows[p] = rows[p], rows[k]
            sign = -sign
        piv = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                rows[i][j] = (piv * rows[i][j] - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = piv
    return sign * rows[n - 1][n - 1] * scale


def _back_substitute(rows: list[list[int]], pivots: list[int], ncols: int,
                     rhs_col: int | None, free_values: dict[int, Fraction]) -> list[Fraction]:
    x = [Fraction(0)] * ncols
    for c, v in free_values.items():
        x[c] = v
    for r in range(len(pivots) - 1, -1, -1):
        c = pivots[r]
        row = rows[r]
        s = Fraction(row[rhs_col]) if rhs_col is not None else Fraction(0)
        for j in range(c + 1, ncols):
            if row[j] and x[j]:
                s -= row[j] * x[j]
        x[c] = s / row[c]
    return x


def solve_linear(M: RatMatrix, rhs: Sequence["int | Fraction"],
                 ncols: int | None = None) -> list[Fraction] | None:
    """One exact solution of ``M x = rhs`` (free variables set to 0), or None."""
    nrows, ncols = _shape(M, ncols)
    if len(rhs) != nrows:
        raise LinearAlgebraError(f"rhs has length {len(rhs)}, expected {nrows}")
    aug = [list(row) + [b] for row, b in zip(M, rhs)]
    rows = _integer_rows(aug, ncols + 1)
    pivots = bareiss_echelon(rows, ncols + 1, stop_col=ncols)
    for r in range(len(pivots), nrows):
        if rows[r][ncols]:
            return None
    return _back_substitute(rows, pivots, ncols, ncols, {})


def nullspace(M: RatMatrix, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the kernel: one vector per free column, with a 1 in that column."""
    nrows, ncols = _shape(M, ncols)
    if not nrows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    rows = _integer_rows(M, ncols)
    pivots = bareiss_echelon(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for f in range(ncols):
        if f in pivot_set:
            continue
        basis.append(_back_substitute(rows, pivots, ncols, None, {f: Fraction(1)}))
    return basis


def mat_vec(M: RatMatrix, v: Sequence[Fraction]) -> list[Fraction]:
    return [sum((Fraction(a) * b for a, b in zip(row, v)), Fraction(0)) for row in M]


# -- the two small systems behind the cycle constructions -------------------

def _quad(a: Fraction) -> Poly:
    x, y = Poly.var(0), Poly.var(1)
    return (x + y * a) ** 2


def solve_quadratic_dependence(a, b, c, d, D=1) -> tuple[Fraction, Fraction, Fraction]:
    """Unique (A, B, C) with A(x+ay)^2 + B(x+by)^2 + C(x+cy)^2 = D(x+dy)^2."""
    a, b, c, d, D = (Fraction(v) for v in (a, b, c, d, D))
    if len({a, b, c}) != 3:
        raise LinearAlgebraError(f"parameters must be pairwise distinct, got {a}, {b}, {c}")
    M = [[1, 1, 1],
         [2 * a, 2 * b, 2 * c],
         [a * a, b * b, c * c]]
    sol = solve_linear(M, [D, 2 * d * D, d * d * D])
    if sol is None:
        raise LinearAlgebraError("quadratic dependence system is inconsistent")
    A, B, C = sol
    if _quad(a) * A + _quad(b) * B + _quad(c) * C != _quad(d) * D:
        raise LinearAlgebraError("quadratic dependence failed certification")
    return A, B, C


def solve_cubic_split(a, b, c, C1, C2) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Unique (A1, A2, B1, B2) with
    (A1 x + A2 y)(x+ay)^2 + (B1 x + B2 y)(x+by)^2 = (C1 x + C2 y)(x+cy)^2."""
    a, b, c, C1, C2 = (Fraction(v) for v in (a, b, c, C1, C2))
    if a == b:
        raise LinearAlgebraError(f"a and b must differ, got {a}")
    M = [[1, 0, 1, 0],
         [2 * a, 1, 2 * b, 1],
         [a * a, 2 * a, b * b, 2 * b],
         [0, a * a, 0, b * b]]
    rhs = [C1, 2 * c * C1 + C2, c * c * C1 + 2 * c * C2, c * c * C2]
    sol = solve_linear(M, rhs)
    if sol is None:
        raise LinearAlgebraError("cubic split system is inconsistent")
    A1, A2, B1, B2 = sol
    x, y = Poly.var(0), Poly.var(1)
    lhs = (x * A1 + y * A2) * _quad(a) + (x * B1 + y * B2) * _quad(b)
    if lhs != (x * C1 + y * C2) * _quad(c):
        raise LinearAlgebraError("cubic split failed certification")
    return A1, A2, B1, B2
