"""Exact integer linear algebra on plain ``list[list[int]]`` matrices.

Python ints are arbitrary precision, so every routine here is exact. Matrices
are row-major lists of rows; vectors are flat lists.
"""
from __future__ import annotations

from typing import TYPE_CHECKING, List, Sequence

if TYPE_CHECKING:
    from .polynomials import IntPoly

Matrix = List[List[int]]
Vector = List[int]


class DimensionError(ValueError):
    """Raised when operand shapes are incompatible."""


def shape(M: Sequence[Sequence[int]]) -> tuple[int, int]:
    rows = len(M)
    cols = len(M[0]) if rows else 0
    if any(len(r) != cols for r in M):
        raise DimensionError("ragged matrix")
    return rows, cols


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def zeros(rows: int, cols: int) -> Matrix:
    return [[0] * cols for _ in range(rows)]


def mat_add(A: Matrix, B: Matrix) -> Matrix:
    if shape(A) != shape(B):
        raise DimensionError(f"cannot add {shape(A)} and {shape(B)}")
    return [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(A, B)]


def mat_mul(A: Matrix, B: Matrix) -> Matrix:
    (p, q), (q2, r) = shape(A), shape(B)
    if q != q2:
        raise DimensionError(f"cannot multiply {p}x{q} by {q2}x{r}")
    cols = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in A]


def transpose(A: Matrix) -> Matrix:
    return [list(col) for col in zip(*A)]


def is_symmetric(A: Matrix) -> bool:
    n, m = shape(A)
    return n == m and all(A[i][j] == A[j][i] for i in range(n) for j in range(i))


def mat_vec(M: Matrix, v: Sequence[int]) -> Vector:
    """Exact product ``M @ v``."""
    _, cols = shape(M)
    if cols != len(v):
        raise DimensionError(f"matrix has {cols} columns, vector has length {len(v)}")
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def kronecker(A: Matrix, B: Matrix) -> Matrix:
    """Kronecker product: block ``(i, j)`` of the result is ``A[i][j] * B``."""
    (m, n), (p, q) = shape(A), shape(B)
    out = zeros(m * p, n * q)
    for i in range(m):
        for j in range(n):
            a = A[i][j]
            if not a:
                continue
            for k in range(p):
                row = out[i * p + k]
                for l in range(q):
                    row[j * q + l] = a * B[k][l]
    return out


def det_bareiss(M: Matrix) -> int:
    """Determinant by one-step fraction-free (Bareiss) elimination.

    Every division in the inner update is exact, so intermediate entries stay
    integral and bounded by minors of ``M``.
    """
    n, cols = shape(M)
    if n != cols:
        raise DimensionError(f"determinant of non-square {n}x{cols} matrix")
    if n == 0:
        return 1
    a = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        tail = a[k][k + 1:]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            if aik:
                ri[k + 1:] = [(pivot * x - aik * y) // prev for x, y in zip(ri[k + 1:], tail)]
            elif pivot != prev:
                ri[k + 1:] = [pivot * x // prev for x in ri[k + 1:]]
        prev = pivot
    return sign * a[n - 1][n - 1]


def charpoly(A: Matrix) -> "IntPoly":
    """Characteristic polynomial ``det(xI - A)`` by evaluation and interpolation.

    ``det(xI - A)`` is sampled at ``x = 0..n`` and rebuilt in the falling
    factorial basis; the k-th forward difference of an integer polynomial is
    divisible by ``k!``, so all divisions are exact.
    """
    from .polynomials import IntPoly

    n, cols = shape(A) if A else (0, 0)
    if n != cols:
        raise DimensionError(f"characteristic polynomial of non-square {n}x{cols} matrix")
    values = []
    for x in range(n + 1):
        xI_minus_A = [[(x if i == j else 0) - A[i][j] for j in range(n)] for i in range(n)]
        values.append(det_bareiss(xI_minus_A))

    # Newton coefficients d_k = Δ^k f(0) / k!
    diffs = list(values)
    newton = []
    fact = 1
    for k in range(n + 1):
        if k:
            fact *= k
        q, r = divmod(diffs[0], fact)
        assert r == 0, "non-integral forward difference"
        newton.append(q)
        diffs = [diffs[i + 1] - diffs[i] for i in range(len(diffs) - 1)]

    result = IntPoly.zero()
    falling = IntPoly.one()
    for k, d in enumerate(newton):
        result = result + falling.scale(d)
        falling = falling * IntPoly([-k, 1])
    return result
