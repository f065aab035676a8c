"""Lie algebras given by structure constants, plus the catalog of algebras used here.

Basis indices are 1-based throughout (``e_1 .. e_n``); coordinate vectors are
plain tuples indexed from 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Mapping, Sequence

from . import linalg
from .linalg import Matrix, Vector, frac_str, to_fraction


class LieAlgebraError(ValueError):
    pass


@dataclass(frozen=True)
class LieAlgebra:
    """Structure constants ``C^k_ij`` stored for ``i < j`` only.

    ``structure[(i, j)]`` maps ``k`` to ``C^k_ij``; zero coefficients and empty
    brackets are dropped at construction so equality is structural.
    """

    dim: int
    structure: Mapping[tuple[int, int], Mapping[int, Fraction]]
    labels: tuple[str, ...] = ()
    name: str = field(default="", compare=False)

    def __post_init__(self):
        n = self.dim
        if n < 1:
            raise LieAlgebraError("dimension must be positive")
        clean: dict[tuple[int, int], dict[int, Fraction]] = {}
        for (i, j), out in self.structure.items():
            if not (1 <= i <= n and 1 <= j <= n):
                raise LieAlgebraError(f"bracket index ({i}, {j}) out of range")
            sign = 1
            if i == j:
                if any(to_fraction(c) != 0 for c in out.values()):
                    raise LieAlgebraError(f"[e{i}, e{i}] must vanish")
                continue
            if i > j:
                i, j, sign = j, i, -1
            row = clean.setdefault((i, j), {})
            for k, c in out.items():
                k = int(k)
                if not 1 <= k <= n:
                    raise LieAlgebraError(f"output index {k} out of range")
                row[k] = row.get(k, Fraction(0)) + sign * to_fraction(c)
        frozen = {}
        for key in sorted(clean):
            row = {k: c for k, c in sorted(clean[key].items()) if c != 0}
            if row:
                frozen[key] = row
        object.__setattr__(self, "structure", frozen)
        labels = tuple(self.labels) or tuple(f"e{i}" for i in range(1, n + 1))
        if len(labels) != n:
            raise LieAlgebraError("need one label per basis vector")
        object.__setattr__(self, "labels", labels)

    def __hash__(self):
        return hash((self.dim, tuple((k, tuple(v.items())) for k, v in self.structure.items())))

    def c(self, i: int, j: int, k: int) -> Fraction:
        """``C^k_ij`` with antisymmetry applied."""
        if i == j:
            return Fraction(0)
        if i < j:
            return self.structure.get((i, j), {}).get(k, Fraction(0))
        return -self.structure.get((j, i), {}).get(k, Fraction(0))

    def bracket_basis(self, i: int, j: int) -> Vector:
        return tuple(self.c(i, j, k) for k in range(1, self.dim + 1))

    def basis(self, i: int) -> Vector:
        return linalg.unit_vector(self.dim, i)

    def ad_matrix(self, X: Sequence) -> Matrix:
        """Matrix of ``ad_X`` in the column convention."""
        cols = [bracket(self, X, self.basis(j)) for j in range(1, self.dim + 1)]
        return linalg.transpose([list(c) for c in cols])

    def __str__(self):
        parts = []
        for (i, j), out in self.structure.items():
            rhs = " + ".join(f"{frac_str(c)}*{self.labels[k - 1]}" for k, c in out.items())
            parts.append(f"[{self.labels[i - 1]}, {self.labels[j - 1]}] = {rhs}")
        return "; ".join(parts) or "abelian"


def bracket(algebra: LieAlgebra, X: Sequence, Y: Sequence) -> Vector:
    n = algebra.dim
    if len(X) != n or len(Y) != n:
        raise LieAlgebraError(f"vectors must have length {n}")
    out = [Fraction(0)] * n
    for (i, j), row in algebra.structure.items():
        coef = X[i - 1] * Y[j - 1] - X[j - 1] * Y[i - 1]
        if coef:
            for k, c in row.items():
                out[k - 1] += coef * c
    return tuple(out)


def jacobi_residual(algebra: LieAlgebra) -> list[tuple[int, int, int, int, Fraction]]:
    """Nonzero components ``(i, j, k, l, value)`` of the Jacobiator on basis triples."""
    n = algebra.dim
    e = algebra.basis
    out = []
    for i, j, k in combinations(range(1, n + 1), 3):
        v = [Fraction(0)] * n
        for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
            w = bracket(algebra, bracket(algebra, e(a), e(b)), e(c))
            v = [x + y for x, y in zip(v, w)]
        out.extend((i, j, k, l + 1, x) for l, x in enumerate(v) if x != 0)
    return out


def is_lie_algebra(algebra: LieAlgebra) -> bool:
    return not jacobi_residual(algebra)


@dataclass(frozen=True)
class Subspace:
    """Subspace of ``R^n`` kept as the rows of its reduced echelon basis."""

    ambient: int
    basis: tuple[Vector, ...]

    @classmethod
    def span(cls, ambient: int, vectors) -> "Subspace":
        vectors = [linalg.vector(v) for v in vectors]
        if any(len(v) != ambient for v in vectors):
            raise LieAlgebraError("vector length does not match ambient dimension")
        red, _ = linalg.rref(vectors) if vectors else ([], [])
        return cls(ambient, tuple(tuple(r) for r in red))

    @classmethod
    def coordinate(cls, ambient: int, indices) -> "Subspace":
        """Span of ``e_i`` for the given 1-based indices."""
        return cls.span(ambient, [linalg.unit_vector(ambient, i) for i in indices])

    @classmethod
    def whole(cls, ambient: int) -> "Subspace":
        return cls.coordinate(ambient, range(1, ambient + 1))

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, ())

    @property
    def dimension(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        if all(x == 0 for x in v):
            return True
        return linalg.rank(list(self.basis) + [list(v)]) == self.dimension

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(v) for v in other.basis)

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace.span(self.ambient, list(self.basis) + list(other.basis))

    def annihilator(self) -> list[Vector]:
        """Functionals (as row vectors) vanishing on this subspace."""
        if not self.basis:
            return [linalg.unit_vector(self.ambient, i) for i in range(1, self.ambient + 1)]
        return linalg.kernel([list(v) for v in self.basis], self.ambient)

    def __str__(self):
        return "span{" + ", ".join("(" + ", ".join(frac_str(x) for x in v) + ")" for v in self.basis) + "}"


def center(algebra: LieAlgebra) -> Subspace:
    n = algebra.dim
    # X central iff [X, e_k] = 0 for all k; stack the linear maps X -> [X, e_k]
    rows = []
    for k in range(1, n + 1):
        m = linalg.transpose([list(algebra.bracket_basis(i, k)) for i in range(1, n + 1)])
        rows.extend(m)
    return Subspace.span(n, linalg.kernel(rows, n))


def bracket_space(algebra: LieAlgebra, A: Subspace, B: Subspace) -> Subspace:
    """Span of ``[a, b]`` over basis vectors of ``A`` and ``B``."""
    vecs = [bracket(algebra, a, b) for a in A.basis for b in B.basis]
    return Subspace.span(algebra.dim, [v for v in vecs if any(v)])


def lower_central_series(algebra: LieAlgebra) -> list[Subspace]:
    """``g_0 = g, g_{k+1} = [g, g_k]`` until the sequence stabilises."""
    g = Subspace.whole(algebra.dim)
    series = [g]
    while True:
        nxt = bracket_space(algebra, g, series[-1])
        if nxt == series[-1]:
            return series
        series.append(nxt)
        if nxt.dimension == 0:
            return series


def is_nilpotent(algebra: LieAlgebra) -> bool:
    return lower_central_series(algebra)[-1].dimension == 0


def is_subalgebra(algebra: LieAlgebra, S: Subspace) -> bool:
    return all(S.contains(bracket(algebra, a, b)) for a, b in combinations(S.basis, 2))


def is_ideal(algebra: LieAlgebra, S: Subspace) -> bool:
    return all(S.contains(bracket(algebra, a, algebra.basis(k))) for a in S.basis for k in range(1, algebra.dim + 1))


@dataclass(frozen=True)
class BasisChange:
    """Columns of ``matrix`` are the new basis vectors in old coordinates."""

    matrix: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        m = tuple(tuple(to_fraction(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        if linalg.det([list(r) for r in m]) == 0:
            raise linalg.SingularMatrixError("basis change must be invertible")

    @classmethod
    def from_images(cls, n: int, images: Mapping[int, Mapping[int, object]]) -> "BasisChange":
        """New ``f_j = sum_i images[j][i] e_i``; unlisted ``j`` keep ``f_j = e_j``."""
        cols = []
        for j in range(1, n + 1):
            col = [Fraction(0)] * n
            if j in images:
                for i, c in images[j].items():
                    col[i - 1] = to_fraction(c)
            else:
                col[j - 1] = Fraction(1)
            cols.append(col)
        return cls(tuple(tuple(r) for r in linalg.transpose(cols)))

    def inverse(self) -> "BasisChange":
        return BasisChange(tuple(tuple(r) for r in linalg.inverse([list(r) for r in self.matrix])))


def change_basis(algebra: LieAlgebra, T: BasisChange) -> LieAlgebra:
    n = algebra.dim
    M = [list(r) for r in T.matrix]
    if len(M) != n:
        raise LieAlgebraError("basis change has wrong size")
    Minv = linalg.inverse(M)
    cols = linalg.transpose(M)
    structure = {}
    for a, b in combinations(range(n), 2):
        v = bracket(algebra, cols[a], cols[b])
        if any(v):
            new = linalg.mat_vec(Minv, v)
            structure[(a + 1, b + 1)] = {k + 1: c for k, c in enumerate(new) if c != 0}
    return LieAlgebra(n, structure)


def central_extension(base: LieAlgebra, omega) -> LieAlgebra:
    """``[X, Y] + omega(X, Y) xi`` on ``base + R xi`` with ``xi = e_{n+1}``."""
    from .forms import KForm, ce_differential

    if not isinstance(omega, KForm) or omega.degree != 2 or omega.dim != base.dim:
        raise LieAlgebraError("central extension needs a 2-form on the base algebra")
    if not ce_differential(base, omega).is_zero():
        raise LieAlgebraError("extension form is not a 2-cocycle")
    n = base.dim
    structure: dict[tuple[int, int], dict[int, Fraction]] = {k: dict(v) for k, v in base.structure.items()}
    for (i, j), c in omega.terms.items():
        structure.setdefault((i, j), {})[n + 1] = c
    return LieAlgebra(n + 1, structure)


def abelian(n: int) -> LieAlgebra:
    return LieAlgebra(n, {}, name=f"abelian_{n}")


def _alg(name: str, n: int, brackets: str) -> LieAlgebra:
    """Parse ``"12:4 23:5 35:-6"`` (single-digit indices) into an algebra."""
    structure: dict[tuple[int, int], dict[int, Fraction]] = {}
    for tok in brackets.split():
        pair, out = tok.split(":")
        sign = -1 if out.startswith("-") else 1
        structure.setdefault((int(pair[0]), int(pair[1])), {})[int(out.lstrip("-"))] = Fraction(sign)
    return LieAlgebra(n, structure, name=name)


# new f_j in terms of old e_i
G1_TO_MAGNIN = BasisChange.from_images(6, {2: {3: 1}, 3: {2: 1}, 5: {5: -1}})
G2_RENAME = BasisChange.from_images(6, {3: {4: 1}, 4: {5: 1}, 5: {6: 1}, 6: {3: 1}})
G3_RENAME = BasisChange.from_images(6, {5: {6: 1}, 6: {5: 1}})

_CATALOG = {
    "g1": lambda: _alg("g1", 6, "12:4 23:5 14:6 35:-6"),
    "g1_magnin": lambda: _alg("g1_magnin", 6, "13:4 14:6 23:5 25:6"),
    "g2": lambda: _alg("g2", 6, "12:4 14:5 24:6"),
    "g2_renamed": lambda: _alg("g2_renamed", 6, "12:3 13:4 23:5"),
    "g3": lambda: _alg("g3", 6, "12:6 34:6"),
    "g3_renamed": lambda: _alg("g3_renamed", 6, "12:5 34:5"),
    "h3": lambda: _alg("h3", 3, "12:3"),
    "h5_heisenberg_like": lambda: _alg("h5_heisenberg_like", 5, "12:5 34:5"),
}

BASIS_CHANGES = {
    ("g1", "g1_magnin"): G1_TO_MAGNIN,
    ("g2", "g2_renamed"): G2_RENAME,
    ("g3", "g3_renamed"): G3_RENAME,
}


def catalog_names() -> list[str]:
    return sorted(_CATALOG) + ["abelian_<n>"]


def catalog(name: str) -> LieAlgebra:
    if name in _CATALOG:
        return _CATALOG[name]()
    if name.startswith("abelian_"):
        try:
            n = int(name.split("_", 1)[1])
        except ValueError:
            n = 0
        if n >= 1:
            return abelian(n)
    raise KeyError(f"unknown algebra {name!r}; known: {', '.join(catalog_names())}")


# --- JSON ---------------------------------------------------------------------

def algebra_to_dict(algebra: LieAlgebra) -> dict:
    return {
        "dim": algebra.dim,
        "labels": list(algebra.labels),
        "brackets": [
            {"i": i, "j": j, "out": {str(k): frac_str(c) for k, c in out.items()}}
            for (i, j), out in algebra.structure.items()
        ],
    }


def algebra_from_dict(data: dict) -> LieAlgebra:
    try:
        n = int(data["dim"])
        structure = {}
        for b in data.get("brackets", []):
            key = (int(b["i"]), int(b["j"]))
            row = structure.setdefault(key, {})
            for k, c in b["out"].items():
                row[int(k)] = row.get(int(k), Fraction(0)) + to_fraction(c)
        return LieAlgebra(n, structure, tuple(data.get("labels") or ()))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise LieAlgebraError(f"malformed algebra description: {exc}") from exc


def dumps(algebra: LieAlgebra) -> str:
    return json.dumps(algebra_to_dict(algebra), indent=2)


def loads(text: str) -> LieAlgebra:
    return algebra_from_dict(json.loads(text))
