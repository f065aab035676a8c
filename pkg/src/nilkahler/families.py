"""Generators for the parametric 2-forms and structures on the three algebras.

Each family is registered under a stable id.  ``emit(id, params)`` binds the
parameters to rationals and returns a concrete ``KForm`` or ``Endomorphism``;
dependent coefficients are computed from their closed-form expressions.
Parameters are named ``w12``, ``psi11``, ``xi36`` and so on.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping

from . import linalg
from .algebra import LieAlgebra, catalog
from .forms import KForm, ce_differential, is_contact, two_form_nondegenerate
from .hitchin import lambda_of
from .operators import Endomorphism, MetricTensor

Params = dict[str, Fraction]


class FamilyError(ValueError):
    pass


class MissingParameterError(FamilyError):
    pass


class ExcludedLocusError(FamilyError):
    pass


@dataclass(frozen=True)
class FamilyDescriptor:
    id: str
    algebra: str
    kind: str  # form | complex_structure | para_structure | contact_form | affinor
    params: tuple[str, ...]
    required: tuple[str, ...]
    # emission is refused when one of these evaluates to zero (denominators mostly)
    excluded_locus: tuple[tuple[str, Callable[[Params], Fraction]], ...]
    build: Callable[[Params], object]
    # extra rejection tests for the sampler: nondegeneracy of forms, Hitchin stability
    admissible: tuple[tuple[str, Callable[[object, Params], bool]], ...] = ()
    choices: Mapping[str, tuple] = field(default_factory=dict)
    description: str = ""


_REGISTRY: dict[str, FamilyDescriptor] = {}


def _register(desc: FamilyDescriptor) -> None:
    if desc.id in _REGISTRY:
        raise RuntimeError(f"duplicate family id {desc.id}")
    _REGISTRY[desc.id] = desc


def family_ids() -> list[str]:
    return sorted(_REGISTRY)


def descriptor(family_id: str) -> FamilyDescriptor:
    try:
        return _REGISTRY[family_id]
    except KeyError:
        raise FamilyError(f"unknown family {family_id!r}") from None


def _form(terms: dict[tuple[int, int], Fraction]) -> KForm:
    return KForm(6, 2, terms)


def _nonzero(name: str) -> tuple[str, Callable[[Params], Fraction]]:
    return (name, lambda p: p[name])


def _nondegenerate(obj, p) -> bool:
    return two_form_nondegenerate(obj)


def _dw_stable(algebra_name: str):
    def check(obj, p) -> bool:
        return lambda_of(ce_differential(catalog(algebra_name), obj), KForm.volume(6)) != 0
    return check


# --- g1 (Magnin basis) ------------------------------------------------------------

def _g1_omega1(p: Params) -> KForm:
    w = p
    w56 = w["w56"]
    o23 = -(w["w13"] * w["w46"] * w56 - w["w15"] * w["w36"] * w["w46"] + w["w16"] * w["w34"] * w56
            + w["w16"] * w["w36"] * w["w45"] - w["w25"] * w["w36"] * w56 + w["w26"] * w["w35"] * w56) / w56 ** 2
    return _form({
        (1, 2): w["w12"], (1, 3): w["w13"], (1, 4): (w["w15"] * w["w46"] - w["w16"] * w["w45"]) / w56,
        (1, 5): w["w15"], (1, 6): w["w16"],
        (2, 3): o23, (2, 4): (w["w25"] * w["w46"] - w["w26"] * w["w45"]) / w56,
        (2, 5): w["w25"], (2, 6): w["w26"],
        (3, 4): w["w34"], (3, 5): w["w35"], (3, 6): w["w36"],
        (4, 5): w["w45"], (4, 6): w["w46"], (5, 6): w56,
    })


def omega2_coefficient_13(p: Params) -> Fraction:
    w = p
    return (w["w14"] * w["w36"] * w["w46"] - w["w16"] * w["w34"] * w["w46"]
            - w["w26"] * w["w35"] * w["w46"] + w["w26"] * w["w36"] * w["w45"]) / w["w46"] ** 2


def _g1_omega2(p: Params) -> KForm:
    w = p
    w46 = w["w46"]
    return _form({
        (1, 2): w["w12"], (1, 3): omega2_coefficient_13(p), (1, 4): w["w14"],
        (1, 5): w["w16"] * w["w45"] / w46, (1, 6): w["w16"],
        (2, 3): w["w23"], (2, 4): w["w24"], (2, 5): w["w26"] * w["w45"] / w46, (2, 6): w["w26"],
        (3, 4): w["w34"], (3, 5): w["w35"], (3, 6): w["w36"],
        (4, 5): w["w45"], (4, 6): w46,
    })


def _g1_P(p: Params) -> Endomorphism:
    w = p
    a = w["w46"]
    w16, w24, w26, w36, w45 = w["w16"], w["w24"], w["w26"], w["w36"], w["w45"]
    return Endomorphism([
        [1, 0, 0, 0, 0, 0],
        [0, -1, 0, 0, 0, 0],
        [0, 0, 1, 0, 0, 0],
        [-2 * w16 / a, 0, -2 * w36 / a, -1, 0, 0],
        [-2 * w26 / a, 0, -2 * w45 / a, 0, -1, 0],
        [(2 * w16 * w36 + 2 * w26 * w45) / a ** 2, (-2 * w24 * a + 2 * w26 * w36) / a ** 2,
         (2 * w36 ** 2 + 2 * w45 ** 2) / a ** 2, 2 * w36 / a, 2 * w45 / a, 1],
    ])


def _g1_J(p: Params) -> Endomorphism:
    x = p["xi36"]
    return Endomorphism([
        [0, -1, 0, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, x],
        [0, 0, 0, 0, -1, 0],
        [0, 0, 0, 1, 0, 0],
        [0, 0, -x, 0, 0, 0],
    ])


def _g1_k1(p: Params) -> KForm:
    w = p
    r = w["w13"] / w["w34"]
    return _form({
        (1, 2): w["w12"], (1, 3): w["w13"], (1, 5): -r * w["w45"], (1, 6): r * w["w35"],
        (2, 3): r * w["w35"], (2, 4): r * w["w45"], (2, 6): -w["w13"],
        (3, 4): w["w34"], (3, 5): w["w35"], (3, 6): w["w36"],
        (4, 5): w["w45"], (4, 6): -w["w35"], (5, 6): w["w34"],
    })


def _g1_k2(p: Params) -> KForm:
    w = p
    r = w["w23"] * w["w45"] / w["w35"]
    return _form({
        (1, 2): w["w12"], (1, 5): -r, (1, 6): w["w23"],
        (2, 3): w["w23"], (2, 4): r,
        (3, 5): w["w35"], (3, 6): w["w36"],
        (4, 5): w["w45"], (4, 6): -w["w35"],
    })


def _g1_k3(p: Params) -> KForm:
    w = p
    r = w["w15"] * w["w34"] / w["w45"]
    return _form({
        (1, 2): w["w12"], (1, 3): -r, (1, 5): w["w15"],
        (2, 4): -w["w15"], (2, 6): r,
        (3, 4): w["w34"], (3, 6): w["w36"],
        (4, 5): w["w45"], (5, 6): w["w34"],
    })


def _g1_k4(p: Params) -> KForm:
    w = p
    return _form({
        (1, 2): w["w12"], (1, 3): w["w13"], (2, 6): -w["w13"],
        (3, 4): w["w34"], (3, 6): w["w36"], (5, 6): w["w34"],
    })


# --- g2 (renamed basis) ------------------------------------------------------------

_G2_GENERAL = ("w12", "w13", "w14", "w15", "w16", "w23", "w24", "w25", "w26", "w34", "w35", "w36")
_G2_PARA = ("w12", "w15", "w16", "w23", "w24", "w35", "w36")


def _pairs_form(names, p: Params) -> KForm:
    return _form({(int(s[1]), int(s[2])): p[s] for s in names})


def _g2_J(p: Params) -> Endomorphism:
    a, b = p["psi11"], p["psi12"]
    p32, p33, p41, p42, p43, p63 = (p[k] for k in ("psi32", "psi33", "psi41", "psi42", "psi43", "psi63"))
    j31 = (a * p32 * p63 - p32 * p33 * p63 + p33 ** 2 * p43 + p43) / (b * p63)
    j51 = (a * a * p42 * p63 - 2 * a * b * p41 * p63 - p32 ** 2 * p63 ** 2 + 2 * p32 * p33 * p43 * p63
           - p33 ** 2 * p43 ** 2 + p42 * p63 - p43 ** 2) / (b * b * p63)
    j61 = (a * p43 - p32 * p63 + p33 * p43) / b
    j21 = -(a * a + 1) / b
    return Endomorphism([
        [a, b, 0, 0, 0, 0],
        [j21, -a, 0, 0, 0, 0],
        [j31, p32, p33, 0, 0, -(p33 ** 2 + 1) / p63],
        [p41, p42, p43, a, b, -p32],
        [j51, -p41, -j61, j21, -a, j31],
        [j61, p43, p63, 0, 0, -p33],
    ])


# --- g3 (renamed basis) and its contact factor ---------------------------------------

def _phi(p: Params) -> Endomorphism:
    return Endomorphism.from_images(5, {1: {2: 1}, 2: {1: -1}, 3: {4: 1}, 4: {3: -1}})


def _eta(p: Params) -> KForm:
    return KForm.basis(5, 5)


def reeb_field(algebra5: LieAlgebra, eta: KForm) -> tuple[Fraction, ...]:
    """The vector ``xi`` with ``eta(xi) = 1`` and ``i_xi d eta = 0``."""
    if not is_contact(algebra5, eta):
        raise FamilyError("eta is not a contact form")
    n = algebra5.dim
    ker = linalg.kernel(ce_differential(algebra5, eta).matrix(), n)
    if len(ker) != 1:
        raise FamilyError("d eta does not have a one-dimensional kernel")
    v = ker[0]
    e = eta.terms
    val = sum((e.get((i + 1,), Fraction(0)) * x for i, x in enumerate(v)), Fraction(0))
    return tuple(x / val for x in v)


def sasaki_metric(algebra5: LieAlgebra, eta: KForm, phi: Endomorphism) -> MetricTensor:
    """``g(X, Y) = d eta(phi X, Y) + eta(X) eta(Y)``."""
    n = algebra5.dim
    if eta.degree != 1 or eta.dim != n or phi.dim != n:
        raise FamilyError("eta and phi must live on the given algebra")
    xi = reeb_field(algebra5, eta)
    if any(phi(xi)):
        raise FamilyError("phi does not kill the Reeb field")
    eta_vec = [eta.terms.get((i,), Fraction(0)) for i in range(1, n + 1)]
    # phi^2 = -Id on ker eta, i.e. phi^2 X = -X + eta(X) xi
    phi2 = (phi @ phi).matrix
    expected = [[-(1 if i == j else 0) + xi[i] * eta_vec[j] for j in range(n)] for i in range(n)]
    if phi2 != expected:
        raise FamilyError("phi is not a complex structure on ker eta")
    deta = ce_differential(algebra5, eta).matrix()
    m = linalg.mat_mul(linalg.transpose(phi.matrix), deta)
    g = [[m[i][j] + eta_vec[i] * eta_vec[j] for j in range(n)] for i in range(n)]
    if not linalg.is_symmetric(g):
        raise FamilyError("d eta(phi X, Y) is not symmetric")
    return MetricTensor(g)


def contact_product_structure(algebra5: LieAlgebra, eta: KForm, phi: Endomorphism) -> Endomorphism:
    """``J(X, f d) = (phi X - f xi, eta(X) d)`` on the algebra times a line."""
    n = algebra5.dim
    xi = reeb_field(algebra5, eta)
    rows = linalg.zeros(n + 1)
    for i in range(n):
        for j in range(n):
            rows[i][j] = phi.rows[i][j]
        rows[i][n] = -xi[i]
    for j in range(n):
        rows[n][j] = eta.terms.get((j + 1,), Fraction(0))
    return Endomorphism(rows)


def _g3_J_sasaki(p: Params) -> Endomorphism:
    return contact_product_structure(catalog("h5_heisenberg_like"), _eta(p), _phi(p))


def _rot_block(a: Fraction, b: Fraction) -> list[list[Fraction]]:
    return [[a, b], [-(a * a + 1) / b, -a]]


def _g3_J_family(p: Params) -> Endomorphism:
    m = linalg.zeros(6)
    for k, (s, t) in enumerate((("psi11", "psi12"), ("psi33", "psi34"), ("psi55", "psi56"))):
        blk = _rot_block(p[s], p[t])
        for i in range(2):
            for j in range(2):
                m[2 * k + i][2 * k + j] = blk[i][j]
    return Endomorphism(m)


# --- registry ------------------------------------------------------------------------

_G1_OMEGA1 = ("w12", "w13", "w15", "w16", "w25", "w26", "w34", "w35", "w36", "w45", "w46", "w56")
_G1_OMEGA2 = ("w12", "w14", "w16", "w23", "w24", "w26", "w34", "w35", "w36", "w45", "w46")

_register(FamilyDescriptor(
    "g1.omega1", "g1_magnin", "form", _G1_OMEGA1, ("w56",), (_nonzero("w56"),), _g1_omega1,
    (("omega nondegenerate", _nondegenerate), ("d omega Hitchin-stable", _dw_stable("g1_magnin"))),
    description="semi-Kahler 2-form on g1 with the (2,3) coefficient solved for"))
_register(FamilyDescriptor(
    "g1.omega2", "g1_magnin", "form", _G1_OMEGA2, ("w46",), (_nonzero("w46"),), _g1_omega2,
    (("w35*w46 - w36*w45", lambda o, p: p["w35"] * p["w46"] - p["w36"] * p["w45"] != 0),
     ("w12*w46 - w14*w26 + w16*w24", lambda o, p: p["w12"] * p["w46"] - p["w14"] * p["w26"] + p["w16"] * p["w24"] != 0),
     ("omega nondegenerate", _nondegenerate), ("d omega Hitchin-stable", _dw_stable("g1_magnin"))),
    description="semi-Kahler 2-form on g1 with the (1,3) coefficient solved for"))
_register(FamilyDescriptor(
    "g1.P_domega2", "g1_magnin", "para_structure", _G1_OMEGA2, ("w46",), (_nonzero("w46"),), _g1_P,
    (("w35*w46 - w36*w45", lambda o, p: p["w35"] * p["w46"] - p["w36"] * p["w45"] != 0),
     ("w12*w46 - w14*w26 + w16*w24", lambda o, p: p["w12"] * p["w46"] - p["w14"] * p["w26"] + p["w16"] * p["w24"] != 0)),
    description="normalised Hitchin operator of d(omega2) in closed form; uses w16 w24 w26 w36 w45 w46"))
_register(FamilyDescriptor(
    "g1.J_magnin", "g1_magnin", "complex_structure", ("xi36",), ("xi36",),
    (("xi36 outside {+1, -1}", lambda p: Fraction(p["xi36"] ** 2 == 1)),), _g1_J, choices={"xi36": (1, -1)},
    description="complex structure on g1; xi36 must be +1 or -1"))
for _k, (_names, _req, _build) in enumerate((
        (("w12", "w13", "w34", "w35", "w36", "w45"), ("w34",), _g1_k1),
        (("w12", "w23", "w35", "w36", "w45"), ("w35",), _g1_k2),
        (("w12", "w15", "w34", "w36", "w45"), ("w45",), _g1_k3),
        (("w12", "w13", "w34", "w36"), (), _g1_k4)), start=1):
    _register(FamilyDescriptor(
        f"g1.omega_k{_k}", "g1_magnin", "form", _names, _req, tuple(_nonzero(r) for r in _req), _build,
        (("omega nondegenerate", _nondegenerate),),
        description=f"J-compatible semi-Kahler 2-form on g1, type {_k}"))

_register(FamilyDescriptor(
    "g2.semikahler_general", "g2_renamed", "form", _G2_GENERAL, (), (),
    lambda p: _pairs_form(_G2_GENERAL, p), (("omega nondegenerate", _nondegenerate),),
    description="2-form on g2 with no e^{ij} terms for 4 <= i < j"))
_register(FamilyDescriptor(
    "g2.semikahler_para", "g2_renamed", "form", _G2_PARA, (), (),
    lambda p: _pairs_form(_G2_PARA, p), (("omega nondegenerate", _nondegenerate),),
    description="semi-Kahler 2-form on g2 compatible with diag(1,-1,1,1,-1,-1)"))
_register(FamilyDescriptor(
    "g2.omega0", "g2_renamed", "form", (), (), (),
    lambda p: _form({(1, 5): 1, (2, 4): -1, (3, 6): -1})))
_register(FamilyDescriptor(
    "g2.J_nilpotent", "g2_renamed", "complex_structure",
    ("psi11", "psi12", "psi32", "psi33", "psi41", "psi42", "psi43", "psi63"), ("psi12", "psi63"),
    (_nonzero("psi12"), _nonzero("psi63")), _g2_J,
    description="nilpotent complex structure compatible with omega0"))
_register(FamilyDescriptor(
    "g2.P", "g2_renamed", "para_structure", (), (), (), lambda p: Endomorphism.diag([1, -1, 1, 1, -1, -1])))

_register(FamilyDescriptor(
    "g3.phi", "h5_heisenberg_like", "affinor", (), (), (), _phi))
_register(FamilyDescriptor(
    "g3.eta", "h5_heisenberg_like", "contact_form", (), (), (), _eta))
_register(FamilyDescriptor(
    "g3.J_sasaki", "g3_renamed", "complex_structure", (), (), (), _g3_J_sasaki,
    description="complex structure built from the contact structure on the 5-dim factor"))
_register(FamilyDescriptor(
    "g3.omega_hermitian", "g3_renamed", "form", (), (), (), lambda p: _form({(1, 2): 1, (3, 4): 1, (5, 6): 1})))
_register(FamilyDescriptor(
    "g3.omega_semikahler", "g3_renamed", "form", (), (), (), lambda p: _form({(1, 2): 1, (3, 4): -1, (5, 6): 1})))
_register(FamilyDescriptor(
    "g3.J_family", "g3_renamed", "complex_structure",
    ("psi11", "psi12", "psi33", "psi34", "psi55", "psi56"), ("psi12", "psi34", "psi56"),
    (_nonzero("psi12"), _nonzero("psi34"), _nonzero("psi56")), _g3_J_family,
    description="block-diagonal complex structures compatible with e^12 - e^34 + e^56"))
_register(FamilyDescriptor(
    "g3.P", "g3_renamed", "para_structure", (), (), (), lambda p: Endomorphism.diag([1, -1, 1, -1, 1, -1])))


# --- emission and sampling --------------------------------------------------------

def bind(family_id: str, params: Mapping[str, object] | None = None) -> Params:
    """Validate and complete a parameter assignment (unlisted optional ones become 0)."""
    desc = descriptor(family_id)
    params = dict(params or {})
    unknown = sorted(set(params) - set(desc.params))
    if unknown:
        raise FamilyError(f"{family_id} has no parameter(s) {', '.join(unknown)}")
    missing = [r for r in desc.required if r not in params]
    if missing:
        raise MissingParameterError(f"{family_id} needs {', '.join(missing)}")
    bound = {name: linalg.to_fraction(params.get(name, 0)) for name in desc.params}
    for label, poly in desc.excluded_locus:
        if poly(bound) == 0:
            raise ExcludedLocusError(f"{family_id}: {label} vanishes at the given parameters")
    return bound


def emit(family_id: str, params: Mapping[str, object] | None = None):
    return descriptor(family_id).build(bind(family_id, params))


def family_algebra(family_id: str) -> LieAlgebra:
    return catalog(descriptor(family_id).algebra)


def is_admissible(family_id: str, params: Mapping[str, object]) -> bool:
    desc = descriptor(family_id)
    try:
        bound = bind(family_id, params)
    except FamilyError:
        return False
    obj = desc.build(bound)
    return all(check(obj, bound) for _, check in desc.admissible)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_admissible(family_id: str, seed: int, count: int, max_tries: int = 1000,
                      fixed: Mapping[str, object] | None = None) -> list[Params]:
    """Seeded rational parameter points off the excluded locus.

    ``fixed`` pins some parameters (for special cases such as ``w23 = 0``).
    """
    desc = descriptor(family_id)
    rng = random.Random(f"{family_id}:{seed}")
    fixed = {k: linalg.to_fraction(v) for k, v in (fixed or {}).items()}
    out: list[Params] = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > max_tries:
            raise FamilyError(f"could not find {count} admissible points for {family_id} "
                              f"in {max_tries} tries")
        point = {}
        for name in desc.params:
            if name in fixed:
                point[name] = fixed[name]
            elif name in desc.choices:
                point[name] = Fraction(rng.choice(desc.choices[name]))
            else:
                point[name] = random_rational(rng)
        if is_admissible(family_id, point):
            out.append(point)
    return out


def parse_query(query: str) -> dict[str, Fraction]:
    """``"w46=2&w12=-3/2"`` -> ``{"w46": 2, "w12": -3/2}``."""
    out: dict[str, Fraction] = {}
    if not query:
        return out
    for item in query.split("&"):
        if not item:
            continue
        if "=" not in item:
            raise FamilyError(f"parameter {item!r} has no value")
        key, val = item.split("=", 1)
        key = key.strip()
        if key in out:
            raise FamilyError(f"parameter {key} given twice")
        try:
            out[key] = linalg.to_fraction(val.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise FamilyError(f"bad value for {key}: {val!r}") from exc
    return out
