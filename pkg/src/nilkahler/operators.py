"""Endomorphisms and symmetric bilinear forms with exact entries.

Column convention: ``A e_j = sum_i A[i][j] e_i``, so column ``j`` of the
matrix is the image of ``e_j``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from . import linalg
from .linalg import Matrix, Vector, frac_str, to_fraction


def _freeze(rows) -> tuple[tuple[Fraction, ...], ...]:
    rows = tuple(tuple(to_fraction(x) for x in r) for r in rows)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix must be square")
    return rows


class Endomorphism:
    __slots__ = ("rows", "__dict__")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = _freeze(rows)

    @classmethod
    def identity(cls, n: int) -> "Endomorphism":
        return cls(linalg.identity(n))

    @classmethod
    def diag(cls, values) -> "Endomorphism":
        return cls(linalg.diag(list(values)))

    @classmethod
    def from_images(cls, n: int, images: dict[int, dict[int, object]]) -> "Endomorphism":
        """``A e_j = sum_i images[j][i] e_i`` (1-based, missing images are zero)."""
        m = linalg.zeros(n)
        for j, img in images.items():
            for i, c in img.items():
                m[i - 1][j - 1] = to_fraction(c)
        return cls(m)

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def matrix(self) -> Matrix:
        return [list(r) for r in self.rows]

    def __call__(self, X: Sequence) -> Vector:
        if len(X) != self.dim:
            raise ValueError("vector has wrong length")
        return linalg.mat_vec(self.rows, X)

    def __matmul__(self, other: "Endomorphism") -> "Endomorphism":
        return Endomorphism(linalg.mat_mul(self.matrix, other.matrix))

    def __add__(self, other: "Endomorphism") -> "Endomorphism":
        return Endomorphism(linalg.mat_add(self.matrix, other.matrix))

    def __sub__(self, other: "Endomorphism") -> "Endomorphism":
        return Endomorphism(linalg.mat_sub(self.matrix, other.matrix))

    def __neg__(self) -> "Endomorphism":
        return Endomorphism(linalg.mat_scale(-1, self.matrix))

    def __mul__(self, c) -> "Endomorphism":
        return Endomorphism(linalg.mat_scale(c, self.matrix))

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def transpose(self) -> "Endomorphism":
        return Endomorphism(linalg.transpose(self.matrix))

    def trace(self) -> Fraction:
        return linalg.trace(self.matrix)

    def det(self) -> Fraction:
        return linalg.det(self.matrix)

    def is_zero(self) -> bool:
        return linalg.is_zero_matrix(self.matrix)

    def __repr__(self):
        body = "; ".join(" ".join(frac_str(x) for x in r) for r in self.rows)
        return f"Endomorphism([{body}])"


class MetricTensor:
    """Symmetric bilinear form ``g(e_i, e_j) = matrix[i][j]``; any signature."""

    __slots__ = ("rows", "__dict__")

    def __init__(self, rows: Sequence[Sequence]):
        self.rows = _freeze(rows)
        if not linalg.is_symmetric([list(r) for r in self.rows]):
            raise ValueError("metric matrix is not symmetric")

    @property
    def dim(self) -> int:
        return len(self.rows)

    @property
    def matrix(self) -> Matrix:
        return [list(r) for r in self.rows]

    def __call__(self, X: Sequence, Y: Sequence) -> Fraction:
        return sum((x * gy for x, gy in zip(X, linalg.mat_vec(self.rows, Y))), Fraction(0))

    @cached_property
    def det(self) -> Fraction:
        return linalg.det(self.matrix)

    @property
    def nondegenerate(self) -> bool:
        return self.det != 0

    @cached_property
    def signature(self) -> tuple[int, int]:
        return linalg.signature(self.matrix)

    @cached_property
    def inverse(self) -> Matrix:
        return linalg.inverse(self.matrix)

    def __eq__(self, other):
        if not isinstance(other, MetricTensor):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        body = "; ".join(" ".join(frac_str(x) for x in r) for r in self.rows)
        return f"MetricTensor([{body}])"


def matrix_to_strings(m) -> list[list[str]]:
    return [[frac_str(x) for x in row] for row in m]


def endomorphism_to_dict(A: Endomorphism) -> dict:
    return {"dim": A.dim, "rows": matrix_to_strings(A.rows)}


def endomorphism_from_dict(data: dict) -> Endomorphism:
    try:
        rows = data["rows"]
        A = Endomorphism(rows)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed endomorphism description: {exc}") from exc
    if "dim" in data and int(data["dim"]) != A.dim:
        raise ValueError("declared dim does not match the number of rows")
    return A


def dumps(A: Endomorphism) -> str:
    return json.dumps(endomorphism_to_dict(A), indent=2)


def loads(text: str) -> Endomorphism:
    return endomorphism_from_dict(json.loads(text))
