"""Levi-Civita connection and curvature of left-invariant pseudo-Riemannian metrics.

For left-invariant fields the Koszul formula reduces to
``2 g(∇_X Y, Z) = g([X,Y],Z) + g([Z,X],Y) + g(X,[Z,Y])``.
Ricci is ``Ric(Y, Z) = trace(X -> R(X, Y) Z)`` by default.  The other candidate,
``trace(X -> R(Y, X) Z)``, differs by a sign; the default gives the orthonormal
metric on ``[e1,e2] = [e3,e4] = e5`` (times a line) scalar curvature -1, as it
must for a 2-step nilpotent algebra (see ``RICCI_CONVENTION``).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import LieAlgebra
from .linalg import Matrix, Vector
from .operators import Endomorphism, MetricTensor

# upper index of R(e_i, e_j) e_k contracted with the first lower slot i
RICCI_CONVENTION = "first"
RICCI_CONVENTIONS = ("first", "second")


class DegenerateMetricError(ValueError):
    pass


@dataclass(frozen=True)
class Connection:
    """``gamma[i][j]`` is the coordinate vector of ``∇_{e_{i+1}} e_{j+1}``."""

    gamma: tuple[tuple[Vector, ...], ...]

    def operator(self, i: int) -> Matrix:
        """Matrix of ``∇_{e_i}`` (1-based ``i``) in the column convention."""
        return linalg.transpose([list(v) for v in self.gamma[i - 1]])

    def nabla(self, X, Y) -> Vector:
        n = len(X)
        out = [Fraction(0)] * n
        for i, x in enumerate(X):
            if not x:
                continue
            for j, y in enumerate(Y):
                if y:
                    for k, c in enumerate(self.gamma[i][j]):
                        out[k] += x * y * c
        return tuple(out)


@dataclass(frozen=True)
class CurvatureData:
    R: dict[tuple[int, int, int], Vector]  # (i, j, k) -> R(e_i, e_j) e_k, 1-based
    ricci: Matrix
    ricci_operator: Matrix
    scalar: Fraction

    @property
    def ricci_flat(self) -> bool:
        return linalg.is_zero_matrix(self.ricci)


def _require_nondegenerate(g: MetricTensor) -> None:
    if not g.nondegenerate:
        raise DegenerateMetricError("metric is degenerate")


def levi_civita(algebra: LieAlgebra, g: MetricTensor) -> Connection:
    _require_nondegenerate(g)
    n = algebra.dim
    if g.dim != n:
        raise DegenerateMetricError("metric and algebra dimensions differ")
    ginv = g.inverse
    G = g.rows
    zero = Fraction(0)
    # gb[i][j][k] = g([e_i, e_j], e_k), built from the sparse structure constants
    gb = [[[zero] * n for _ in range(n)] for _ in range(n)]
    for (i, j), out in algebra.structure.items():
        for k in range(n):
            v = sum((c * G[m - 1][k] for m, c in out.items()), zero)
            gb[i - 1][j - 1][k] = v
            gb[j - 1][i - 1][k] = -v
    gamma = []
    for i in range(n):
        row = []
        for j in range(n):
            rhs = [(gb[i][j][k] + gb[k][i][j] + gb[k][j][i]) / 2 for k in range(n)]
            row.append(linalg.mat_vec(ginv, rhs) if any(rhs) else (zero,) * n)
        gamma.append(tuple(row))
    return Connection(tuple(gamma))


def curvature_tensor(algebra: LieAlgebra, conn: Connection) -> dict[tuple[int, int, int], Vector]:
    """``R(e_i, e_j) e_k = ∇_i ∇_j e_k - ∇_j ∇_i e_k - ∇_[e_i,e_j] e_k``."""
    n = algebra.dim
    ops = [conn.operator(i) for i in range(1, n + 1)]
    # commutators are taken over the integers after clearing a common denominator
    den = math.lcm(*(x.denominator for op in ops for row in op for x in row))
    iops = [[[int(x * den) for x in row] for row in op] for op in ops]
    den2 = den * den
    R = {}
    for i in range(n):
        for j in range(n):
            if j < i:
                for k in range(n):
                    R[(i + 1, j + 1, k + 1)] = tuple(-x for x in R[(j + 1, i + 1, k + 1)])
                continue
            A, B = iops[i], iops[j]
            Bt, At = list(zip(*B)), list(zip(*A))
            M = [[Fraction(sum(a * b for a, b in zip(A[r], Bt[c])) - sum(a * b for a, b in zip(B[r], At[c])), den2)
                  for c in range(n)] for r in range(n)]
            for m, c in enumerate(algebra.bracket_basis(i + 1, j + 1)):
                if c:
                    M = linalg.mat_sub(M, linalg.mat_scale(c, ops[m]))
            cols = linalg.transpose(M)
            for k in range(n):
                R[(i + 1, j + 1, k + 1)] = tuple(cols[k])
    return R


def ricci_form(R: dict[tuple[int, int, int], Vector], n: int, convention: str = RICCI_CONVENTION) -> Matrix:
    """``Ric(e_j, e_k) = sum_i [R(e_i, e_j) e_k]^i`` ("first") or with ``R(e_j, e_i)`` ("second")."""
    if convention not in RICCI_CONVENTIONS:
        raise ValueError(f"unknown Ricci convention {convention!r}")
    sign = 1 if convention == "first" else -1
    return [[sign * sum((R[(i, j, k)][i - 1] for i in range(1, n + 1)), Fraction(0))
             for k in range(1, n + 1)] for j in range(1, n + 1)]


def ricci(algebra: LieAlgebra, g: MetricTensor, R: dict[tuple[int, int, int], Vector],
          convention: str = RICCI_CONVENTION) -> tuple[Matrix, Matrix, Fraction]:
    """Ricci form, Ricci operator (``Ric(X,Y) = g(RIC X, Y)``) and scalar curvature."""
    _require_nondegenerate(g)
    n = algebra.dim
    ric = ricci_form(R, n, convention)
    if not linalg.is_symmetric(ric):
        raise ArithmeticError("Ricci form came out asymmetric")
    op = linalg.mat_mul(g.inverse, ric)
    return ric, op, linalg.trace(op)


def curvature(algebra: LieAlgebra, g: MetricTensor, convention: str = RICCI_CONVENTION) -> CurvatureData:
    conn = levi_civita(algebra, g)
    R = curvature_tensor(algebra, conn)
    ric, op, s = ricci(algebra, g, R, convention)
    return CurvatureData(R, ric, op, s)


def is_ricci_flat(algebra: LieAlgebra, g: MetricTensor) -> bool:
    return curvature(algebra, g).ricci_flat


def torsion_defect(algebra: LieAlgebra, conn: Connection) -> dict[tuple[int, int], Vector]:
    """Nonzero ``∇_i e_j - ∇_j e_i - [e_i, e_j]``."""
    n = algebra.dim
    out = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            v = tuple(a - b - c for a, b, c in
                      zip(conn.gamma[i - 1][j - 1], conn.gamma[j - 1][i - 1], algebra.bracket_basis(i, j)))
            if any(v):
                out[(i, j)] = v
    return out


def metric_defect(algebra: LieAlgebra, g: MetricTensor, conn: Connection) -> dict[tuple[int, int, int], Fraction]:
    """Nonzero ``g(∇_i e_j, e_k) + g(e_j, ∇_i e_k)``."""
    n = algebra.dim
    e = algebra.basis
    out = {}
    for i in range(n):
        for j in range(n):
            for k in range(j, n):
                v = g(conn.gamma[i][j], e(k + 1)) + g(e(j + 1), conn.gamma[i][k])
                if v:
                    out[(i + 1, j + 1, k + 1)] = v
    return out


def bianchi_defect(R: dict[tuple[int, int, int], Vector], n: int) -> dict[tuple[int, int, int], Vector]:
    out = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(j + 1, n + 1):
                v = tuple(a + b + c for a, b, c in zip(R[(i, j, k)], R[(j, k, i)], R[(k, i, j)]))
                if any(v):
                    out[(i, j, k)] = v
    return out


def skew_defect(g: MetricTensor, R: dict[tuple[int, int, int], Vector], n: int) -> list[tuple[int, int, int, int]]:
    """Index tuples where ``g(R(X,Y)Z, W) + g(R(X,Y)W, Z)`` fails to vanish."""
    e = lambda a: linalg.unit_vector(n, a)  # noqa: E731
    bad = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            for k in range(1, n + 1):
                for l in range(k, n + 1):
                    if g(R[(i, j, k)], e(l)) + g(R[(i, j, l)], e(k)):
                        bad.append((i, j, k, l))
    return bad


def ricci_endomorphism(data: CurvatureData) -> Endomorphism:
    return Endomorphism(data.ricci_operator)
