"""Almost complex and almost paracomplex structures on a Lie algebra.

Covers Nijenhuis tensors, the ascending ideal sequence of a complex structure,
compatibility with 2-forms, associated metrics and the semi-Kahler condition
``omega ^ d omega = 0``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Literal

from . import linalg
from .algebra import LieAlgebra, Subspace, bracket, is_subalgebra
from .forms import FormError, KForm, ce_differential, wedge
from .linalg import Matrix, Vector
from .operators import Endomorphism, MetricTensor

Kind = Literal["complex", "para"]


class StructureError(ValueError):
    pass


def _check_dim(algebra: LieAlgebra, A: Endomorphism) -> None:
    if A.dim != algebra.dim:
        raise StructureError(f"operator is {A.dim}x{A.dim} but the algebra has dimension {algebra.dim}")


def nijenhuis_value(algebra: LieAlgebra, A: Endomorphism, X, Y, kind: Kind) -> Vector:
    """``N(X,Y) = [AX,AY] - eps [X,Y] - A[AX,Y] - A[X,AY]``, eps = +1 complex, -1 para."""
    eps = 1 if kind == "complex" else -1
    AX, AY = A(X), A(Y)
    v1 = bracket(algebra, AX, AY)
    v2 = bracket(algebra, X, Y)
    v3 = A(bracket(algebra, AX, Y))
    v4 = A(bracket(algebra, X, AY))
    return tuple(a - eps * b - c - d for a, b, c, d in zip(v1, v2, v3, v4))


def _nijenhuis(algebra: LieAlgebra, A: Endomorphism, kind: Kind) -> dict[tuple[int, int], Vector]:
    _check_dim(algebra, A)
    n = algebra.dim
    e = algebra.basis
    return {(i, j): nijenhuis_value(algebra, A, e(i), e(j), kind) for i, j in combinations(range(1, n + 1), 2)}


def nijenhuis_complex(algebra: LieAlgebra, J: Endomorphism) -> dict[tuple[int, int], Vector]:
    """``N_J(e_i, e_j)`` for ``i < j``."""
    return _nijenhuis(algebra, J, "complex")


def nijenhuis_para(algebra: LieAlgebra, P: Endomorphism) -> dict[tuple[int, int], Vector]:
    """``N_P(e_i, e_j) = [Pe_i,Pe_j] + [e_i,e_j] - P[Pe_i,e_j] - P[e_i,Pe_j]`` for ``i < j``."""
    return _nijenhuis(algebra, P, "para")


def nijenhuis(algebra: LieAlgebra, A: Endomorphism, kind: Kind) -> dict[tuple[int, int], Vector]:
    return nijenhuis_complex(algebra, A) if kind == "complex" else nijenhuis_para(algebra, A)


def nonzero_components(N: dict[tuple[int, int], Vector]) -> dict[tuple[int, int], Vector]:
    return {k: v for k, v in N.items() if any(v)}


def is_integrable(algebra: LieAlgebra, A: Endomorphism, kind: Kind) -> bool:
    return not nonzero_components(nijenhuis(algebra, A, kind))


def eigenspace(A: Endomorphism, value) -> Subspace:
    """``ker(A - value * Id)``."""
    n = A.dim
    m = (A - Endomorphism.identity(n) * value).matrix
    return Subspace.span(n, linalg.kernel(m, n))


def square_defect(A: Endomorphism, kind: Kind) -> Endomorphism:
    n = A.dim
    I = Endomorphism.identity(n)
    return A @ A + I if kind == "complex" else A @ A - I


@dataclass(frozen=True)
class StructureReport:
    kind: str
    square_defect: Endomorphism
    nijenhuis: dict[tuple[int, int], Vector]
    eigen_dims: tuple[int, int] | None = None
    eigenspaces_subalgebras: bool | None = None
    compat_defect: Matrix | None = None
    nilpotent_depth: int | None = None
    chain_dims: tuple[int, ...] = field(default=())

    @property
    def is_almost(self) -> bool:
        if not self.square_defect.is_zero():
            return False
        if self.kind == "para":
            n = self.square_defect.dim
            return self.eigen_dims == (n // 2, n // 2)
        return True

    @property
    def integrable(self) -> bool:
        return not nonzero_components(self.nijenhuis)

    @property
    def compatible(self) -> bool | None:
        if self.compat_defect is None:
            return None
        return linalg.is_zero_matrix(self.compat_defect)

    @property
    def nilpotent(self) -> bool | None:
        if self.kind != "complex" or not self.is_almost:
            return None
        return self.nilpotent_depth is not None


def almost_structure_check(algebra: LieAlgebra, A: Endomorphism, kind: Kind,
                           omega: KForm | None = None) -> StructureReport:
    """Collect square, Nijenhuis (and optionally compatibility) data for ``A``."""
    if kind not in ("complex", "para"):
        raise StructureError(f"unknown structure kind {kind!r}")
    _check_dim(algebra, A)
    n = algebra.dim
    sq = square_defect(A, kind)
    N = nijenhuis(algebra, A, kind)
    compat = compatibility_defect(omega, A, kind) if omega is not None else None
    if kind == "para":
        plus, minus = eigenspace(A, 1), eigenspace(A, -1)
        dims = (plus.dimension, minus.dimension)
        subalg = is_subalgebra(algebra, plus) and is_subalgebra(algebra, minus)
        if sq.is_zero() and dims[0] + dims[1] == n and subalg != (not nonzero_components(N)):
            raise ArithmeticError("Nijenhuis tensor and eigenspace involutivity disagree")
        return StructureReport(kind, sq, N, dims, subalg, compat)
    depth = None
    chain: tuple[int, ...] = ()
    if sq.is_zero():
        seq = nilpotency_sequence(algebra, A)
        chain = tuple(s.dimension for s in seq)
        if seq and seq[-1].dimension == n:
            depth = len(seq)
    return StructureReport(kind, sq, N, compat_defect=compat, nilpotent_depth=depth, chain_dims=chain)


def nilpotency_sequence(algebra: LieAlgebra, J: Endomorphism) -> list[Subspace]:
    """``a_1(J) ⊂ a_2(J) ⊂ ...`` until stationary (``a_0 = 0`` is omitted)."""
    _check_dim(algebra, J)
    n = algebra.dim
    if not square_defect(J, "complex").is_zero():
        raise StructureError("nilpotency sequence needs J^2 = -Id")
    ads = []  # matrix of X -> [X, e_k] for each k
    for k in range(1, n + 1):
        ads.append(linalg.transpose([list(algebra.bracket_basis(i, k)) for i in range(1, n + 1)]))
    Jm = J.matrix
    prev = Subspace.zero(n)
    seq: list[Subspace] = []
    while True:
        Q = [list(f) for f in prev.annihilator()]
        rows: list[list[Fraction]] = []
        if Q:
            for M in ads:
                QM = linalg.mat_mul(Q, M)
                rows.extend(QM)
                rows.extend(linalg.mat_mul(QM, Jm))
        nxt = Subspace.span(n, linalg.kernel(rows, n)) if rows else Subspace.whole(n)
        if nxt == prev:
            return seq
        seq.append(nxt)
        if nxt.dimension == n:
            return seq
        prev = nxt


def is_nilpotent_structure(algebra: LieAlgebra, J: Endomorphism) -> bool:
    seq = nilpotency_sequence(algebra, J)
    return bool(seq) and seq[-1].dimension == algebra.dim


def compatibility_defect(omega: KForm, A: Endomorphism, kind: Kind) -> Matrix:
    """``omega(Ae_i, Ae_j) - omega(e_i, e_j)`` (complex) or ``+ omega(e_i, e_j)`` (para)."""
    if omega.degree != 2:
        raise FormError("compatibility is defined for 2-forms")
    if omega.dim != A.dim:
        raise StructureError("form and operator dimensions differ")
    W = omega.matrix()
    M = A.matrix
    pulled = linalg.mat_mul(linalg.transpose(M), linalg.mat_mul(W, M))
    return linalg.mat_sub(pulled, W) if kind == "complex" else linalg.mat_add(pulled, W)


def infinitesimal_compatibility_defect(omega: KForm, A: Endomorphism) -> Matrix:
    """``omega(Ae_i, e_j) + omega(e_i, Ae_j)``."""
    if omega.degree != 2:
        raise FormError("compatibility is defined for 2-forms")
    W = omega.matrix()
    M = A.matrix
    return linalg.mat_add(linalg.mat_mul(linalg.transpose(M), W), linalg.mat_mul(W, M))


def is_compatible(omega: KForm, A: Endomorphism, kind: Kind) -> bool:
    return linalg.is_zero_matrix(compatibility_defect(omega, A, kind))


def associated_metric(omega: KForm, A: Endomorphism) -> MetricTensor:
    """``g(X, Y) = omega(X, AY)``."""
    if omega.degree != 2:
        raise FormError("associated metric needs a 2-form")
    g = linalg.mat_mul(omega.matrix(), A.matrix)
    if not linalg.is_symmetric(g):
        raise StructureError("omega(X, AY) is not symmetric; the pair is not compatible")
    return MetricTensor(g)


def semi_kahler_defect(algebra: LieAlgebra, omega: KForm) -> KForm:
    """``omega ^ d omega``; zero exactly for semi-Kahler forms in dimension six."""
    if omega.degree != 2:
        raise FormError("semi-Kahler test needs a 2-form")
    d_omega = ce_differential(algebra, omega)
    defect = wedge(omega, d_omega)
    if ce_differential(algebra, wedge(omega, omega)) != defect * 2:
        raise ArithmeticError("d(omega^2) != 2 omega ^ d omega")
    return defect


def is_semi_kahler(algebra: LieAlgebra, omega: KForm) -> bool:
    return semi_kahler_defect(algebra, omega).is_zero()


@dataclass(frozen=True)
class KahlerResidual:
    compatibility: Matrix  # omega_kj J^k_i + omega_ik J^k_j
    square: Matrix  # J^i_k J^k_j + delta^i_j
    integrability: dict[tuple[int, int, int], Fraction]  # (i, j, k) -> N component

    def is_zero(self) -> bool:
        return (linalg.is_zero_matrix(self.compatibility) and linalg.is_zero_matrix(self.square)
                and not any(self.integrability.values()))

    def blocks_zero(self) -> tuple[bool, bool, bool]:
        return (linalg.is_zero_matrix(self.compatibility), linalg.is_zero_matrix(self.square),
                not any(self.integrability.values()))


def kahler_system_residual(algebra: LieAlgebra, omega: KForm, J: Endomorphism) -> KahlerResidual:
    """Index-form residuals of the compatibility, square and integrability equations."""
    _check_dim(algebra, J)
    n = algebra.dim
    w = omega.matrix()
    Jm = J.rows  # Jm[k][i] = J^k_i
    r = range(n)
    C = [[[algebra.c(i + 1, j + 1, k + 1) for k in r] for j in r] for i in r]
    compat = [[sum((w[k][j] * Jm[k][i] + w[i][k] * Jm[k][j] for k in r), Fraction(0)) for j in r] for i in r]
    square = [[sum((Jm[i][k] * Jm[k][j] for k in r), Fraction(0)) + (1 if i == j else 0) for j in r] for i in r]
    integ = {}
    for i in r:
        for j in r:
            for k in r:
                s = -C[i][j][k]
                for l in r:
                    if Jm[l][i]:
                        s += sum((Jm[l][i] * Jm[m][j] * C[l][m][k] for m in r if Jm[m][j]), Fraction(0))
                        s -= sum((Jm[l][i] * Jm[k][m] * C[l][j][m] for m in r if Jm[k][m]), Fraction(0))
                    if Jm[l][j]:
                        s -= sum((Jm[l][j] * Jm[k][m] * C[i][l][m] for m in r if Jm[k][m]), Fraction(0))
                integ[(i + 1, j + 1, k + 1)] = s
    return KahlerResidual(compat, square, integ)
