"""Dense exact linear algebra over ``Fraction`` (or any exact field).

Matrices are tuples of row tuples. Nothing here rounds. The field helpers
take an explicit ``zero``/``one`` so the same routines work for the
quadratic-extension scalars used by the doubling checks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Iterable, Sequence

Matrix = tuple[tuple[Any, ...], ...]
Vector = tuple[Any, ...]


class SingularMatrixError(ValueError):
    pass


def as_fraction(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as an exact rational")


def matrix(rows: Iterable[Iterable]) -> Matrix:
    """Build a rational matrix from nested iterables of ints/strings/Fractions."""
    out = tuple(tuple(as_fraction(x) for x in row) for row in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise ValueError("ragged matrix")
    return out


def shape(m: Matrix) -> tuple[int, int]:
    return len(m), (len(m[0]) if m else 0)


def is_square(m: Matrix) -> bool:
    r, c = shape(m)
    return r == c


def identity(n: int, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    return tuple(tuple(one if i == j else zero for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None, zero=Fraction(0)) -> Matrix:
    return tuple(tuple(zero for _ in range(n if m is None else m)) for _ in range(n))


def diagonal(entries: Sequence, zero=Fraction(0)) -> Matrix:
    n = len(entries)
    return tuple(tuple(entries[i] if i == j else zero for j in range(n)) for i in range(n))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m))


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if shape(a)[1] != shape(b)[0]:
        raise ValueError(f"shape mismatch {shape(a)} @ {shape(b)}")
    cols = transpose(b)
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x != 0]
        new_row = []
        for col in cols:
            acc = None
            for k, x in nz:
                y = col[k]
                if y != 0:
                    acc = x * y if acc is None else acc + x * y
            new_row.append(acc if acc is not None else row[0] * 0)
        out.append(tuple(new_row))
    return tuple(out)


def matvec(m: Matrix, v: Sequence) -> Vector:
    if shape(m)[1] != len(v):
        raise ValueError("dimension mismatch in matvec")
    nz = [(k, x) for k, x in enumerate(v) if x != 0]
    out = []
    for row in m:
        acc = row[0] * 0 if row else 0
        for k, x in nz:
            if row[k] != 0:
                acc += row[k] * x
        out.append(acc)
    return tuple(out)


def block_diag(blocks: Sequence[Matrix], zero=Fraction(0)) -> Matrix:
    n = sum(len(b) for b in blocks)
    rows = []
    offset = 0
    for b in blocks:
        size = len(b)
        for r in b:
            rows.append((zero,) * offset + tuple(r) + (zero,) * (n - offset - size))
        offset += size
    return tuple(rows)


def is_integral(m: Matrix) -> bool:
    return all(Fraction(x).denominator == 1 for row in m for x in row)


def to_int_matrix(m: Matrix) -> tuple[tuple[int, ...], ...]:
    if not is_integral(m):
        raise ValueError("matrix has non-integer entries")
    return tuple(tuple(int(x) for x in row) for row in m)


def det(m: Matrix):
    """Determinant by Bareiss fraction-free elimination.

    Every division is exact in the base ring, so integer input stays in
    Python ints throughout.
    """
    n, c = shape(m)
    if n != c:
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    a = [list(row) for row in m]
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
                return a[0][0] * 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                num = a[i][j] * pivot - a[i][k] * a[k][j]
                a[i][j] = num // prev if isinstance(num, int) and isinstance(prev, int) else num / prev
            a[i][k] = a[i][k] * 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def inverse(m: Matrix, one=Fraction(1), zero=Fraction(0)) -> Matrix:
    """Gauss-Jordan inverse over an exact field; raises SingularMatrixError."""
    n, c = shape(m)
    if n != c:
        raise ValueError("inverse of a non-square matrix")
    a = [list(row) + [one if i == j else zero for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv_p = one / a[col][col]
        a[col] = [x * inv_p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def matpow(m: Matrix, e: int) -> Matrix:
    """Integer power, negative exponents through the exact inverse."""
    n = len(m)
    if e < 0:
        m, e = inverse(m), -e
    result = identity(n)
    base = m
    while e:
        if e & 1:
            result = matmul(result, base)
        base = matmul(base, base)
        e >>= 1
    return result


def rref(rows: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    """Reduced row echelon form of the span of ``rows`` (zero rows dropped)."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return []
    ncols = len(a[0])
    pivot_row = 0
    for col in range(ncols):
        piv = next((r for r in range(pivot_row, len(a)) if a[r][col] != 0), None)
        if piv is None:
            continue
        a[pivot_row], a[piv] = a[piv], a[pivot_row]
        p = a[pivot_row][col]
        a[pivot_row] = [x / p for x in a[pivot_row]]
        for r in range(len(a)):
            if r != pivot_row and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[pivot_row])]
        pivot_row += 1
        if pivot_row == len(a):
            break
    return a[:pivot_row]


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows))


def nullspace(m: Matrix) -> list[Vector]:
    """Basis of {x : m x = 0}, one vector per free column."""
    ncols = shape(m)[1]
    red = rref(m)
    pivots = []
    for row in red:
        pivots.append(next(i for i, x in enumerate(row) if x != 0))
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for row, p in zip(red, pivots):
            v[p] = -row[free]
        basis.append(tuple(v))
    return basis


def in_span(v: Sequence[Fraction], rows: Sequence[Sequence[Fraction]]) -> bool:
    return rank(list(rows) + [list(v)]) == rank(rows)


def unit_vector(n: int, i: int) -> Vector:
    return tuple(Fraction(1) if k == i else Fraction(0) for k in range(n))
