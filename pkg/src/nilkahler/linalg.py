"""Exact linear algebra over the rationals.

Matrices are lists of rows of ``Fraction``; vectors are tuples of ``Fraction``.
Everything here is small-dimensional (n <= 7 in practice), so plain Gaussian
elimination is fine.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Iterable, Sequence

Matrix = list[list[Fraction]]
Vector = tuple[Fraction, ...]


class SingularMatrixError(ValueError):
    pass


def to_fraction(x) -> Fraction:
    """Parse ints, Fractions and rational literals such as ``"-3/2"``."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        s = x.strip().replace("−", "-")
        return Fraction(s)
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted; use a rational literal")
    return Fraction(x)


def frac_str(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def vector(values: Iterable) -> Vector:
    return tuple(to_fraction(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (Fraction(0),) * n


def unit_vector(n: int, i: int) -> Vector:
    """Coordinate vector of ``e_i`` (``i`` is 1-based)."""
    v = [Fraction(0)] * n
    v[i - 1] = Fraction(1)
    return tuple(v)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return [[to_fraction(x) for x in row] for row in rows]


def zeros(n: int, m: int | None = None) -> Matrix:
    return [[Fraction(0)] * (n if m is None else m) for _ in range(n)]


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def diag(values: Sequence) -> Matrix:
    n = len(values)
    out = zeros(n)
    for i, v in enumerate(values):
        out[i][i] = to_fraction(v)
    return out


def copy(a: Matrix) -> Matrix:
    return [list(row) for row in a]


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a: Matrix) -> Matrix:
    c = to_fraction(c)
    return [[c * x for x in row] for row in a]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    # skipping zero factors matters: most matrices here are sparse
    return [[sum((x * y for x, y in zip(row, col) if x and y), Fraction(0)) for col in bt] for row in a]


def mat_vec(a: Matrix, v: Sequence[Fraction]) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, v) if x and y), Fraction(0)) for row in a)


def trace(a: Matrix) -> Fraction:
    return sum((a[i][i] for i in range(len(a))), Fraction(0))


def is_zero_matrix(a: Matrix) -> bool:
    return all(x == 0 for row in a for x in row)


def is_symmetric(a: Matrix) -> bool:
    n = len(a)
    return all(a[i][j] == a[j][i] for i in range(n) for j in range(i + 1, n))


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = [list(map(to_fraction, r)) for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        m[r] = [x / p for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[1])


def kernel(a: Matrix, ncols: int | None = None) -> list[Vector]:
    """Basis of the right null space ``{x : a x = 0}``."""
    if ncols is None:
        ncols = len(a[0]) if a else 0
    if not a:
        return [unit_vector(ncols, i + 1) for i in range(ncols)]
    red, pivots = rref(a)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def det(a: Matrix) -> Fraction:
    m = copy(a)
    n = len(m)
    out = Fraction(1)
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            out = -out
        p = m[c][c]
        out *= p
        for i in range(c + 1, n):
            if m[i][c] != 0:
                f = m[i][c] / p
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return out


def inverse(a: Matrix) -> Matrix:
    n = len(a)
    aug = [list(row) + e for row, e in zip(copy(a), identity(n))]
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return [row[n:] for row in red]


def solve(a: Matrix, b: Sequence[Fraction]) -> Vector:
    """Unique solution of ``a x = b`` for square invertible ``a``."""
    n = len(a)
    aug = [list(row) + [to_fraction(v)] for row, v in zip(a, b)]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is singular")
    return tuple(row[n] for row in red)


def signature(a: Matrix) -> tuple[int, int]:
    """Inertia ``(p, q)`` of a symmetric matrix via congruence diagonalisation."""
    if not is_symmetric(a):
        raise ValueError("signature requires a symmetric matrix")
    m = copy(a)
    n = len(m)

    def add_multiple(dst: int, src: int, f: Fraction) -> None:
        # congruence x_dst += f x_src, applied to rows then columns
        m[dst] = [x + f * y for x, y in zip(m[dst], m[src])]
        for row in m:
            row[dst] += f * row[src]

    pos = neg = 0
    for k in range(n):
        i = next((i for i in range(k, n) if m[i][i] != 0), None)
        if i is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if m[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            add_multiple(i, j, Fraction(1))
        m[k], m[i] = m[i], m[k]
        for row in m:
            row[k], row[i] = row[i], row[k]
        p = m[k][k]
        for r in range(k + 1, n):
            if m[r][k] != 0:
                add_multiple(r, k, -m[r][k] / p)
        if p > 0:
            pos += 1
        else:
            neg += 1
    return pos, neg


def rational_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of a non-negative rational, or ``None``."""
    x = Fraction(x)
    if x < 0:
        return None
    a, b = x.numerator, x.denominator
    ra, rb = isqrt(a), isqrt(b)
    if ra * ra == a and rb * rb == b:
        return Fraction(ra, rb)
    return None
