"""Hitchin's operator for 3-forms in dimension six.

For a 3-form ``Omega`` and volume form ``mu``, ``K(X)`` is the vector with
``i_{K(X)} mu = i_X Omega ^ Omega``.  Then ``K^2 = lambda * Id`` and the sign of
``lambda`` decides between a paracomplex (positive) and complex (negative)
structure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from . import linalg
from .forms import FormError, KForm, interior_product, wedge
from .linalg import Vector
from .operators import Endomorphism


class DegenerateFormError(ValueError):
    pass


@dataclass(frozen=True)
class HitchinResult:
    K: Endomorphism
    lam: Fraction
    kind: str  # "para", "complex" or "degenerate"
    normalized: Endomorphism | None

    @property
    def is_stable(self) -> bool:
        return self.lam != 0


def _volume_coeff(mu: KForm) -> Fraction:
    n = mu.dim
    if mu.degree != n:
        raise FormError("volume form must have top degree")
    c = mu.terms.get(tuple(range(1, n + 1)), Fraction(0))
    if c == 0:
        raise FormError("volume form is zero")
    return c


def dual_iso(alpha: KForm, mu: KForm) -> Vector:
    """The vector ``X`` with ``i_X mu = alpha`` for an (n-1)-form ``alpha``."""
    n = alpha.dim
    if alpha.degree != n - 1:
        raise FormError(f"expected a {n - 1}-form")
    c = _volume_coeff(mu)
    full = tuple(range(1, n + 1))
    X = []
    for j in range(1, n + 1):
        # i_{e_j} e^{1..n} = (-1)^(j-1) e^{1..^j..n}
        rest = full[: j - 1] + full[j:]
        X.append((-1) ** (j - 1) * alpha.terms.get(rest, Fraction(0)) / c)
    return tuple(X)


def hitchin_K(Omega: KForm, mu: KForm) -> Endomorphism:
    if Omega.degree != 3 or Omega.dim != 6:
        raise FormError("Hitchin's operator needs a 3-form in dimension six")
    n = Omega.dim
    cols = []
    for i in range(1, n + 1):
        a = wedge(interior_product(linalg.unit_vector(n, i), Omega), Omega)
        cols.append(list(dual_iso(a, mu)))
    return Endomorphism(linalg.transpose(cols))


def hitchin_operator(Omega: KForm, mu: KForm) -> HitchinResult:
    n = Omega.dim
    K = hitchin_K(Omega, mu)
    K2 = K @ K
    lam = K2.trace() / n
    if K2 != Endomorphism.identity(n) * lam:
        raise ArithmeticError("K^2 is not a multiple of the identity")
    if lam > 0:
        kind = "para"
    elif lam < 0:
        kind = "complex"
    else:
        kind = "degenerate"
    root = linalg.rational_sqrt(abs(lam)) if lam else None
    normalized = K * (1 / root) if root else None
    return HitchinResult(K, lam, kind, normalized)


def induced_structure(Omega: KForm, mu: KForm) -> Endomorphism:
    """``K / sqrt(|lambda|)``: a paracomplex or complex structure on the space."""
    res = hitchin_operator(Omega, mu)
    if res.lam == 0:
        raise DegenerateFormError("3-form is degenerate (lambda = 0)")
    if res.normalized is None:
        raise DegenerateFormError(
            f"|lambda| = {linalg.frac_str(abs(res.lam))} is not a rational square; "
            "use the unnormalised operator K instead"
        )
    return res.normalized


def lambda_of(Omega: KForm, mu: KForm) -> Fraction:
    return hitchin_operator(Omega, mu).lam
