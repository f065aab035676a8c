"""Deliberately naive curvature computation, used to cross-check ``curvature``.

Nothing here reuses the main pipeline.  Arithmetic runs on gmpy2's ``mpq``
rather than ``fractions.Fraction``, the metric is inverted by its own
Gauss-Jordan loop, Christoffel symbols come from the Koszul system written
with dense structure constants, and curvature is a plain quadruple loop over
``R^l_{ijk}``.  Results are handed back as ``Fraction``.
"""

from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq

ZERO = mpq(0)


def _inverse(g: list[list[mpq]]) -> list[list[mpq]]:
    n = len(g)
    m = [list(row) + [mpq(int(i == j)) for j in range(n)] for i, row in enumerate(g)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular metric")
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [row[n:] for row in m]


def _frac(x: mpq) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


def oracle_curvature(C, g) -> dict:
    """``C[i][j][k]`` = coefficient of ``e_k`` in ``[e_i, e_j]`` (0-based), ``g`` a symmetric matrix.

    Returns Christoffel symbols ``Gamma[i][j][k]`` (``∇_i e_j = Γ^k_ij e_k``), the
    curvature ``R[i][j][k][l]`` (``R(e_i,e_j)e_k = R^l e_l``), the Ricci form
    ``Ric[j][k] = sum_i R^i_{ijk}`` and the scalar curvature, all as Fractions.
    """
    n = len(g)
    g = [[mpq(x) for x in row] for row in g]
    C = [[[mpq(x) for x in row] for row in plane] for plane in C]

    def gb(i, j, k):
        # g([e_i, e_j], e_k)
        return sum((C[i][j][m] * g[m][k] for m in range(n)), ZERO)

    ginv = _inverse(g)
    Gamma = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            rhs = [(gb(i, j, k) + gb(k, i, j) + gb(k, j, i)) / 2 for k in range(n)]
            # sum_m Γ^m_ij g[m][k] = rhs[k], so Γ_ij = g^-1 rhs (g symmetric)
            Gamma[i][j] = [sum((ginv[m][k] * rhs[k] for k in range(n)), ZERO) for m in range(n)]

    R = [[[[ZERO] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    v = ZERO
                    for m in range(n):
                        v += Gamma[j][k][m] * Gamma[i][m][l]
                        v -= Gamma[i][k][m] * Gamma[j][m][l]
                        v -= C[i][j][m] * Gamma[m][k][l]
                    R[i][j][k][l] = v

    Ric = [[sum((R[i][j][k][i] for i in range(n)), ZERO) for k in range(n)] for j in range(n)]
    S = sum((ginv[a][b] * Ric[b][a] for a in range(n) for b in range(n)), ZERO)
    return {
        "Gamma": [[[_frac(x) for x in v] for v in row] for row in Gamma],
        "R": [[[[_frac(x) for x in v] for v in plane] for plane in cube] for cube in R],
        "Ric": [[_frac(x) for x in row] for row in Ric],
        "scalar": _frac(S),
    }


def structure_array(algebra) -> list:
    n = algebra.dim
    return [[[algebra.c(i + 1, j + 1, k + 1) for k in range(n)] for j in range(n)] for i in range(n)]
