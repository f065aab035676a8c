"""Alternating forms on the dual of a Lie algebra and the Chevalley-Eilenberg differential.

A k-form is stored as a sparse map from strictly increasing 1-based index tuples
to rationals, with the determinant convention
``(e^1 ^ e^2)(e_1, e_2) = 1``.  Wedge products carry no factorial factors.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from . import linalg
from .algebra import LieAlgebra
from .linalg import Matrix, frac_str, to_fraction


class FormError(ValueError):
    pass


def _sort_sign(idx: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Sign of the sorting permutation, 0 when an index repeats."""
    idx = list(idx)
    if len(set(idx)) != len(idx):
        return 0, ()
    sign = 1
    # insertion sort, counting transpositions
    for a in range(1, len(idx)):
        b = a
        while b > 0 and idx[b - 1] > idx[b]:
            idx[b - 1], idx[b] = idx[b], idx[b - 1]
            sign = -sign
            b -= 1
    return sign, tuple(idx)


class KForm:
    """Immutable alternating form of fixed degree on ``R^dim``."""

    __slots__ = ("dim", "degree", "terms")

    def __init__(self, dim: int, degree: int, terms: Mapping[Sequence[int], object] | None = None):
        # degrees above dim are allowed but such forms are always zero
        if degree < 0:
            raise FormError("negative degree")
        clean: dict[tuple[int, ...], Fraction] = {}
        for idx, c in (terms or {}).items():
            idx = (idx,) if isinstance(idx, int) else tuple(idx)
            if len(idx) != degree:
                raise FormError(f"index tuple {idx} does not have degree {degree}")
            if any(not 1 <= i <= dim for i in idx):
                raise FormError(f"index tuple {idx} out of range")
            sign, key = _sort_sign(idx)
            if sign == 0:
                continue
            clean[key] = clean.get(key, Fraction(0)) + sign * to_fraction(c)
        object.__setattr__(self, "dim", dim)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", {k: v for k, v in sorted(clean.items()) if v != 0})

    def __setattr__(self, name, value):
        raise AttributeError("KForm is immutable")

    # construction helpers

    @classmethod
    def zero(cls, dim: int, degree: int) -> "KForm":
        return cls(dim, degree)

    @classmethod
    def scalar(cls, dim: int, value) -> "KForm":
        return cls(dim, 0, {(): value})

    @classmethod
    def basis(cls, dim: int, *indices: int) -> "KForm":
        """``e^{i1} ^ ... ^ e^{ik}`` (indices need not be sorted)."""
        return cls(dim, len(indices), {tuple(indices): 1})

    @classmethod
    def volume(cls, dim: int, coeff=1) -> "KForm":
        return cls(dim, dim, {tuple(range(1, dim + 1)): coeff})

    @classmethod
    def from_matrix(cls, m: Sequence[Sequence]) -> "KForm":
        """2-form with ``omega(e_i, e_j) = m[i-1][j-1]`` (upper triangle is read)."""
        n = len(m)
        return cls(n, 2, {(i + 1, j + 1): m[i][j] for i in range(n) for j in range(i + 1, n)})

    # algebra

    def _check(self, other: "KForm") -> None:
        if not isinstance(other, KForm):
            raise TypeError("expected a KForm")
        if other.dim != self.dim:
            raise FormError("forms live on spaces of different dimension")

    def __add__(self, other: "KForm") -> "KForm":
        self._check(other)
        if other.degree != self.degree:
            raise FormError("cannot add forms of different degree")
        terms = dict(self.terms)
        for k, v in other.terms.items():
            terms[k] = terms.get(k, Fraction(0)) + v
        return KForm(self.dim, self.degree, terms)

    def __neg__(self) -> "KForm":
        return KForm(self.dim, self.degree, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other: "KForm") -> "KForm":
        return self + (-other)

    def __mul__(self, c) -> "KForm":
        c = to_fraction(c)
        return KForm(self.dim, self.degree, {k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __xor__(self, other: "KForm") -> "KForm":
        return wedge(self, other)

    def __eq__(self, other):
        if not isinstance(other, KForm):
            return NotImplemented
        return (self.dim, self.degree, self.terms) == (other.dim, other.degree, other.terms)

    def __hash__(self):
        return hash((self.dim, self.degree, tuple(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, *indices: int) -> Fraction:
        sign, key = _sort_sign(indices)
        return sign * self.terms.get(key, Fraction(0)) if sign else Fraction(0)

    def __call__(self, *vectors: Sequence) -> Fraction:
        """Evaluate on ``degree`` vectors."""
        if len(vectors) != self.degree:
            raise FormError(f"a {self.degree}-form takes {self.degree} arguments")
        total = Fraction(0)
        for idx, c in self.terms.items():
            m = [[v[i - 1] for v in vectors] for i in idx]
            total += c * linalg.det(m) if m else c
        return total

    def matrix(self) -> Matrix:
        """Antisymmetric coefficient matrix of a 2-form."""
        if self.degree != 2:
            raise FormError("coefficient matrix is defined for 2-forms only")
        m = linalg.zeros(self.dim)
        for (i, j), c in self.terms.items():
            m[i - 1][j - 1] = c
            m[j - 1][i - 1] = -c
        return m

    def __repr__(self):
        if not self.terms:
            return f"KForm(dim={self.dim}, degree={self.degree}, 0)"
        return f"KForm(dim={self.dim}, degree={self.degree}, {self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for idx, c in self.terms.items():
            basis = "^".join(f"e{i}" for i in idx) or "1"
            parts.append(f"{frac_str(c)}*{basis}")
        return " + ".join(parts).replace("+ -", "- ")


def wedge(a: KForm, b: KForm) -> KForm:
    a._check(b)
    if a.degree + b.degree > a.dim:
        raise FormError("degree overflow in wedge product")
    terms: dict[tuple[int, ...], Fraction] = {}
    for ia, ca in a.terms.items():
        for ib, cb in b.terms.items():
            sign, key = _sort_sign(ia + ib)
            if sign:
                terms[key] = terms.get(key, Fraction(0)) + sign * ca * cb
    return KForm(a.dim, a.degree + b.degree, terms)


def wedge_all(forms: Iterable[KForm]) -> KForm:
    forms = list(forms)
    out = forms[0]
    for f in forms[1:]:
        out = wedge(out, f)
    return out


def power(a: KForm, k: int) -> KForm:
    """``a ^ a ^ ... ^ a`` (k factors, no 1/k! normalisation)."""
    out = KForm.scalar(a.dim, 1)
    for _ in range(k):
        out = wedge(out, a)
    return out


def interior_product(X: Sequence, a: KForm) -> KForm:
    """Contraction of ``X`` into the first slot of ``a``."""
    if a.degree == 0:
        raise FormError("cannot contract a 0-form")
    if len(X) != a.dim:
        raise FormError("vector has wrong length")
    terms: dict[tuple[int, ...], Fraction] = {}
    for idx, c in a.terms.items():
        for pos, i in enumerate(idx):
            x = X[i - 1]
            if x:
                key = idx[:pos] + idx[pos + 1:]
                terms[key] = terms.get(key, Fraction(0)) + (-1) ** pos * x * c
    return KForm(a.dim, a.degree - 1, terms)


def _d_basis_one_form(algebra: LieAlgebra, k: int) -> KForm:
    # (d e^k)(e_i, e_j) = -e^k([e_i, e_j]) = -C^k_ij
    terms = {}
    for (i, j), out in algebra.structure.items():
        if k in out:
            terms[(i, j)] = -out[k]
    return KForm(algebra.dim, 2, terms)


def ce_differential(algebra: LieAlgebra, a: KForm) -> KForm:
    """Chevalley-Eilenberg differential, extended from 1-forms as an antiderivation."""
    n = algebra.dim
    if a.dim != n:
        raise FormError("form and algebra dimensions differ")
    if a.degree >= n:
        return KForm.zero(n, a.degree + 1)
    d1 = {k: _d_basis_one_form(algebra, k) for k in range(1, n + 1)}
    out = KForm.zero(n, a.degree + 1)
    for idx, c in a.terms.items():
        for pos, i in enumerate(idx):
            if d1[i].is_zero():
                continue
            left = KForm.basis(n, *idx[:pos])
            right = KForm.basis(n, *idx[pos + 1:])
            term = wedge(wedge(left, d1[i]), right)
            out = out + term * ((-1) ** pos * c)
    return out


def two_form_nondegenerate(omega: KForm) -> bool:
    if omega.degree != 2:
        raise FormError("nondegeneracy test expects a 2-form")
    return linalg.det(omega.matrix()) != 0


def is_contact(algebra: LieAlgebra, eta: KForm) -> bool:
    n = algebra.dim
    if n % 2 == 0:
        raise FormError("contact forms need odd dimension")
    if eta.degree != 1:
        raise FormError("contact form must be a 1-form")
    m = (n - 1) // 2
    return not wedge(eta, power(ce_differential(algebra, eta), m)).is_zero()


def top_coefficient(a: KForm, mu: KForm) -> Fraction:
    """The ``c`` with ``a = c * mu`` for top-degree ``a`` and volume form ``mu``."""
    n = a.dim
    if a.degree != n or mu.degree != n:
        raise FormError("top_coefficient needs top-degree forms")
    full = tuple(range(1, n + 1))
    m = mu.terms.get(full, Fraction(0))
    if m == 0:
        raise FormError("volume form is zero")
    return a.terms.get(full, Fraction(0)) / m


def cyclic_closedness(algebra: LieAlgebra, omega: KForm, X, Y, Z) -> Fraction:
    """``omega([X,Y],Z) - omega([X,Z],Y) + omega([Y,Z],X)``, the usual closedness expression."""
    from .algebra import bracket

    return (omega(bracket(algebra, X, Y), Z) - omega(bracket(algebra, X, Z), Y)
            + omega(bracket(algebra, Y, Z), X))


# --- JSON ---------------------------------------------------------------------

def form_to_dict(a: KForm) -> dict:
    return {
        "dim": a.dim,
        "degree": a.degree,
        "terms": [{"idx": list(idx), "coeff": frac_str(c)} for idx, c in a.terms.items()],
    }


def form_from_dict(data: dict) -> KForm:
    try:
        n, k = int(data["dim"]), int(data["degree"])
        terms: dict[tuple[int, ...], Fraction] = {}
        for t in data.get("terms", []):
            sign, key = _sort_sign([int(i) for i in t["idx"]])
            if len(key) != k and sign:
                raise FormError(f"term {t['idx']} does not have degree {k}")
            if sign:
                terms[key] = terms.get(key, Fraction(0)) + sign * to_fraction(t["coeff"])
        return KForm(n, k, terms)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise FormError(f"malformed form description: {exc}") from exc


def dumps(a: KForm) -> str:
    return json.dumps(form_to_dict(a), indent=2)


def loads(text: str) -> KForm:
    return form_from_dict(json.loads(text))
