"""Exact rational matrices.

Matrices are 2-D numpy arrays with ``dtype=object`` holding
:class:`fractions.Fraction` entries.  Nothing here ever touches floating
point; equality is exact.
"""

import math
from fractions import Fraction

import numpy as np


class SingularMatrix(ArithmeticError):
    pass


def scalar(value):
    """Coerce ``value`` to a Fraction.

    Accepts ints, Fractions and strings such as ``"3"``, ``"-2"`` or ``"5/7"``.
    Floats are rejected so that nothing inexact leaks in.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (bool, float)) or isinstance(value, np.floating):
        raise TypeError(f"inexact scalar {value!r}")
    if isinstance(value, (int, np.integer)):
        return Fraction(int(value))
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def format_scalar(x):
    x = scalar(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def matrix(rows):
    """Build an exact matrix from a nested sequence of rational-like values."""
    rows = [list(r) for r in rows]
    if not rows or not rows[0]:
        raise ValueError("matrix dimensions must be at least 1")
    width = len(rows[0])
    if any(len(r) != width for r in rows):
        raise ValueError("ragged matrix")
    out = np.empty((len(rows), width), dtype=object)
    for i, r in enumerate(rows):
        for j, v in enumerate(r):
            out[i, j] = scalar(v)
    return out


def zeros(rows, cols=None):
    cols = rows if cols is None else cols
    out = np.empty((rows, cols), dtype=object)
    out.fill(Fraction(0))
    return out


def identity(n):
    out = zeros(n)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def diag(values):
    values = [scalar(v) for v in values]
    out = zeros(len(values))
    for i, v in enumerate(values):
        out[i, i] = v
    return out


def mat_mul(a, b):
    """Product that skips zero entries; character matrices are mostly zeros."""
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"cannot multiply {a.shape} by {b.shape}")
    rows_b = [[(j, x) for j, x in enumerate(row) if x] for row in b]
    out = zeros(a.shape[0], b.shape[1])
    for i, row in enumerate(a):
        acc = {}
        for t, x in enumerate(row):
            if x:
                for j, y in rows_b[t]:
                    acc[j] = acc.get(j, 0) + x * y
        for j, v in acc.items():
            if v:
                out[i, j] = v
    return out


def mat_prod(mats, n=None):
    """Ordered product ``mats[0] @ mats[1] @ ...``; identity of size ``n`` if empty."""
    out = None
    for m in mats:
        out = m if out is None else mat_mul(out, m)
    if out is None:
        if n is None:
            raise ValueError("empty product needs an explicit size")
        return identity(n)
    return out


def mat_equal(a, b):
    a = np.asarray(a, dtype=object)
    b = np.asarray(b, dtype=object)
    return a.shape == b.shape and bool(np.all(a == b))


def kron(a, b):
    out = np.empty((a.shape[0] * b.shape[0], a.shape[1] * b.shape[1]), dtype=object)
    for i in range(a.shape[0]):
        for j in range(a.shape[1]):
            out[i * b.shape[0]:(i + 1) * b.shape[0], j * b.shape[1]:(j + 1) * b.shape[1]] = a[i, j] * b
    return out


def mat_det(a):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n, m = a.shape
    if n != m:
        raise ValueError("determinant of a non-square matrix")
    # Bareiss on integers after clearing denominators row by row.
    rows = []
    scale = Fraction(1)
    for i in range(n):
        den = math.lcm(*(x.denominator for x in a[i]))
        scale /= den
        rows.append([int(x * den) for x in a[i]])
    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = rows[k][k]
        for i in range(k + 1, n):
            ri = rows[i]
            rik = ri[k]
            rk = rows[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pivot - rik * rk[j]) // prev
            ri[k] = 0
        prev = pivot
    return sign * Fraction(rows[n - 1][n - 1]) * scale if n else Fraction(1)


def mat_inverse(a):
    """Exact inverse by Gauss-Jordan elimination over the rationals."""
    n, m = a.shape
    if n != m:
        raise ValueError("inverse of a non-square matrix")
    work = [list(a[i]) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if work[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix("matrix is singular")
        work[col], work[pivot] = work[pivot], work[col]
        p = work[col][col]
        row = [x / p for x in work[col]]
        work[col] = row
        for r in range(n):
            if r != col and work[r][col] != 0:
                f = work[r][col]
                work[r] = [x - f * y for x, y in zip(work[r], row)]
    return matrix([r[n:] for r in work])


def is_diagonal(a):
    n, m = a.shape
    return all(a[i, j] == 0 for i in range(n) for j in range(m) if i != j)


def to_strings(a):
    return [[format_scalar(x) for x in row] for row in a]
