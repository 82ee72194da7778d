"""Small exact linear-algebra routines over the rationals."""

from __future__ import annotations

from fractions import Fraction
from math import gcd


def solve_linear(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """Solve A x = b exactly; None if inconsistent.

    For underdetermined systems the free variables are set to zero; used for
    membership tests where any solution witnesses solvability.
    """
    m = [row[:] + [b] for row, b in zip(matrix, rhs)]
    rows, cols = len(m), len(matrix[0]) if matrix else 0
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                factor = m[i][c]
                m[i] = [a - factor * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if m[i][cols] != 0:
            return None
    x = [Fraction(0)] * cols
    for row, c in enumerate(pivots):
        x[c] = m[row][cols]
    return x


def nullspace(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Basis of the kernel of A, as a list of vectors."""
    rows = [row[:] for row in matrix]
    n_rows, n_cols = len(rows), len(matrix[0]) if matrix else 0
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, n_rows) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    basis = []
    free = [c for c in range(n_cols) if c not in pivots]
    for fc in free:
        vec = [Fraction(0)] * n_cols
        vec[fc] = Fraction(1)
        for row, pc in enumerate(pivots):
            vec[pc] = -rows[row][fc]
        basis.append(vec)
    return basis


def primitive_integer_vector(vec: list[Fraction]) -> list[int]:
    """Scale a rational vector to coprime integers, preferring positive sum."""
    mult = 1
    for v in vec:
        mult = mult * v.denominator // gcd(mult, v.denominator)
    ints = [int(v * mult) for v in vec]
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g:
        ints = [v // g for v in ints]
    if sum(ints) < 0 or (sum(ints) == 0 and next((v for v in ints if v), 0) < 0):
        ints = [-v for v in ints]
    return ints


def mat_mul_vec(matrix: list[list[int]], vec: list[int]) -> list[int]:
    return [sum(a * b for a, b in zip(row, vec)) for row in matrix]


def mat_mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    n, k, m = len(a), len(b), len(b[0])
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)] for i in range(n)]
