"""Command-line front end.

Object references:
  catalog:<name>                    an algebra from the catalog
  family:<id>?w46=2&w12=-3/2        an emitted family member
  file:<path>                       a JSON algebra, form or endomorphism

Exit status: 0 success or predicate true, 1 predicate false (or a failed
reproduction claim), 2 bad input.  The report is a single JSON document on
stdout (or ``--out``); a one-line summary goes to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from . import __version__
from . import algebra as alg_mod
from . import families as fam
from . import forms as forms_mod
from . import operators as ops_mod
from .algebra import LieAlgebra, catalog, jacobi_residual
from .curvature import DegenerateMetricError, curvature
from .forms import FormError, KForm, ce_differential, is_contact
from .hitchin import hitchin_operator
from .linalg import frac_str
from .operators import Endomorphism, matrix_to_strings
from .reproduce import criterion_verdicts, run_all
from .structures import (StructureError, almost_structure_check, associated_metric,
                         compatibility_defect, is_nilpotent_structure, nilpotency_sequence,
                         nonzero_components, semi_kahler_defect)

PREDICATES = ("jacobi", "semi-kahler", "complex", "para", "compatible", "nilpotent-structure",
              "contact", "ricci-flat")


class InputError(Exception):
    pass


# --- reference resolution -----------------------------------------------------------

def _read_file(path: str) -> tuple[dict, str]:
    p = Path(path)
    try:
        raw = p.read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path} must contain a JSON object")
    return data, hashlib.sha256(raw).hexdigest()


def _split(ref: str) -> tuple[str, str]:
    if ":" not in ref:
        raise InputError(f"reference {ref!r} needs a catalog:, family: or file: prefix")
    scheme, rest = ref.split(":", 1)
    if scheme not in ("catalog", "family", "file"):
        raise InputError(f"unknown reference scheme {scheme!r}")
    return scheme, rest


def _family(rest: str, echo: dict):
    fid, _, query = rest.partition("?")
    try:
        params = fam.parse_query(query)
        obj = fam.emit(fid, params)
    except fam.FamilyError as exc:
        raise InputError(str(exc)) from exc
    echo.update({"family": fid, "params": {k: frac_str(v) for k, v in sorted(params.items())}})
    return obj, fam.descriptor(fid).algebra


def resolve_algebra(ref: str, echo: dict) -> LieAlgebra:
    scheme, rest = _split(ref)
    echo["ref"] = ref
    if scheme == "catalog":
        try:
            return catalog(rest)
        except KeyError as exc:
            raise InputError(exc.args[0]) from exc
    if scheme == "file":
        data, digest = _read_file(rest)
        echo["sha256"] = digest
        try:
            a = alg_mod.algebra_from_dict(data)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
        return a
    raise InputError("algebras are referenced by catalog: or file:")


def resolve_object(ref: str, want: type, echo: dict):
    """Returns ``(object, default algebra name or None)``."""
    scheme, rest = _split(ref)
    echo["ref"] = ref
    if scheme == "family":
        obj, alg_name = _family(rest, echo)
        if not isinstance(obj, want):
            raise InputError(f"{rest.partition('?')[0]} is not a {'form' if want is KForm else 'operator'}")
        return obj, alg_name
    if scheme == "file":
        data, digest = _read_file(rest)
        echo["sha256"] = digest
        try:
            if want is KForm:
                return forms_mod.form_from_dict(data), None
            return ops_mod.endomorphism_from_dict(data), None
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    raise InputError("forms and operators are referenced by family: or file:")


def _form_json(a: KForm) -> dict:
    return forms_mod.form_to_dict(a)


def _endo_json(A: Endomorphism | None):
    return None if A is None else matrix_to_strings(A.rows)


# --- commands --------------------------------------------------------------------

class Job:
    """Collects the resolved inputs shared by every command."""

    def __init__(self, args):
        self.inputs: dict = {}
        self.form = self.operator = None
        default_alg = None
        if getattr(args, "form", None):
            echo = {}
            self.form, default_alg = resolve_object(args.form, KForm, echo)
            self.inputs["form"] = echo
        if getattr(args, "operator", None):
            echo = {}
            self.operator, alg2 = resolve_object(args.operator, Endomorphism, echo)
            default_alg = default_alg or alg2
            self.inputs["operator"] = echo
        echo = {}
        if args.algebra:
            self.algebra = resolve_algebra(args.algebra, echo)
        elif default_alg:
            self.algebra = catalog(default_alg)
            echo["ref"] = f"catalog:{default_alg}"
        else:
            raise InputError("--algebra is required")
        self.inputs["algebra"] = echo
        n = self.algebra.dim
        if self.form is not None and self.form.dim != n:
            raise InputError(f"form has dimension {self.form.dim}, algebra has {n}")
        if self.operator is not None and self.operator.dim != n:
            raise InputError(f"operator has dimension {self.operator.dim}, algebra has {n}")

    def need(self, *names):
        for name in names:
            if getattr(self, name) is None:
                raise InputError(f"--{name} is required here")


def _kind(args) -> str:
    if not args.kind:
        raise InputError("--kind {complex,para} is required here")
    return args.kind


def _geometry_report(job: Job, kind: str) -> dict:
    om, A = job.form, job.operator
    defect = compatibility_defect(om, A, kind)
    if any(x for row in defect for x in row):
        raise InputError("form and operator are not compatible")
    g = associated_metric(om, A)
    if not g.nondegenerate:
        raise InputError("associated metric is degenerate")
    cd = curvature(job.algebra, g)
    return {
        "metric": matrix_to_strings(g.rows),
        "signature": list(g.signature),
        "ricci": matrix_to_strings(cd.ricci),
        "ricci_operator": matrix_to_strings(cd.ricci_operator),
        "scalar": frac_str(cd.scalar),
        "flags": {"ricci_flat": cd.ricci_flat},
    }


def cmd_check(args) -> tuple[dict, int, str]:
    job = Job(args)
    a = job.algebra
    pred = args.predicate
    result: dict = {}
    if pred == "jacobi":
        res = jacobi_residual(a)
        ok = not res
        result["residual"] = [[i, j, k, l, frac_str(v)] for i, j, k, l, v in res]
    elif pred == "semi-kahler":
        job.need("form")
        d = semi_kahler_defect(a, job.form)
        ok = d.is_zero()
        result["omega_wedge_domega"] = _form_json(d)
    elif pred in ("complex", "para"):
        job.need("operator")
        rep = almost_structure_check(a, job.operator, pred)
        ok = rep.is_almost and rep.integrable
        result.update({
            "square_defect": _endo_json(rep.square_defect),
            "nijenhuis": {f"{i},{j}": [frac_str(x) for x in v]
                          for (i, j), v in nonzero_components(rep.nijenhuis).items()},
            "almost": rep.is_almost, "integrable": rep.integrable,
        })
        if pred == "para":
            result["eigen_dims"] = list(rep.eigen_dims)
    elif pred == "compatible":
        job.need("form", "operator")
        defect = compatibility_defect(job.form, job.operator, _kind(args))
        ok = not any(x for row in defect for x in row)
        result["compatibility_defect"] = matrix_to_strings(defect)
    elif pred == "nilpotent-structure":
        job.need("operator")
        try:
            seq = nilpotency_sequence(a, job.operator)
        except StructureError as exc:
            raise InputError(str(exc)) from exc
        ok = is_nilpotent_structure(a, job.operator)
        result["chain_dims"] = [s.dimension for s in seq]
    elif pred == "contact":
        job.need("form")
        try:
            ok = is_contact(a, job.form)
        except FormError as exc:
            raise InputError(str(exc)) from exc
    elif pred == "ricci-flat":
        job.need("form", "operator")
        geo = _geometry_report(job, _kind(args))
        ok = geo["flags"]["ricci_flat"]
        result.update(geo)
    else:  # argparse restricts choices; kept for direct callers
        raise InputError(f"unknown predicate {pred!r}")
    report = {"command": "check", "predicate": pred, "inputs": job.inputs, "holds": ok, "result": result}
    return report, 0 if ok else 1, f"{pred}: {'holds' if ok else 'fails'}"


def cmd_geometry(args) -> tuple[dict, int, str]:
    job = Job(args)
    job.need("form", "operator")
    kind = _kind(args)
    geo = _geometry_report(job, kind)
    report = {"command": "geometry", "kind": kind, "inputs": job.inputs, "result": geo}
    return report, 0, f"scalar curvature {geo['scalar']}, signature {tuple(geo['signature'])}"


def cmd_hitchin(args) -> tuple[dict, int, str]:
    job = Job(args)
    job.need("form")
    if job.algebra.dim != 6:
        raise InputError("Hitchin's operator needs a 6-dimensional algebra")
    if job.form.degree != 2:
        raise InputError("--form must be a 2-form; its differential is used")
    d = ce_differential(job.algebra, job.form)
    res = hitchin_operator(d, KForm.volume(6))
    result = {
        "d_omega": _form_json(d),
        "K": _endo_json(res.K),
        "lambda": frac_str(res.lam),
        "kind": res.kind,
        "induced_structure": _endo_json(res.normalized),
        "volume_form": "e1^e2^e3^e4^e5^e6",
    }
    report = {"command": "hitchin", "inputs": job.inputs, "result": result}
    return report, 0, f"lambda = {result['lambda']} ({res.kind})"


def cmd_reproduce(args) -> tuple[dict, int, str]:
    results = run_all(args.seed, args.samples)
    verdicts = criterion_verdicts(results)
    all_ok = all(r.passed for r in results)
    report = {
        "command": "reproduce",
        "seed": args.seed,
        "samples": args.samples,
        "criteria": {str(k): v for k, v in verdicts.items()},
        "claims": [r.to_dict() for r in results],
    }
    failed = [str(k) for k, v in verdicts.items() if not v]
    summary = "all criteria pass" if not failed else f"criteria failing: {', '.join(failed)}"
    return report, 0 if all_ok else 1, summary


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilkahler", description=__doc__.split("\n\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, form=True, operator=True, kind=True):
        p.add_argument("--algebra", help="catalog:<name> or file:<path>")
        if form:
            p.add_argument("--form", help="family:<id>?params or file:<path>")
        if operator:
            p.add_argument("--operator", help="family:<id>?params or file:<path>")
        if kind:
            p.add_argument("--kind", choices=("complex", "para"))
        p.add_argument("--out", help="write the JSON report here instead of stdout")

    p = sub.add_parser("check", help="evaluate a predicate")
    common(p)
    p.add_argument("--predicate", required=True, choices=PREDICATES)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("geometry", help="metric, Ricci and scalar curvature of a compatible pair")
    common(p)
    p.set_defaults(func=cmd_geometry)

    p = sub.add_parser("hitchin", help="Hitchin operator of d(omega)")
    common(p, operator=False, kind=False)
    p.set_defaults(func=cmd_hitchin)

    p = sub.add_parser("reproduce", aliases=["reproduce-paper"], help="run every verification claim")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=5)
    p.add_argument("--out")
    p.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "samples", 1) < 1:
        parser.error("--samples must be positive")
    try:
        report, code, summary = args.func(args)
    except (InputError, StructureError, FormError, DegenerateMetricError, ValueError) as exc:
        report, code, summary = {"command": args.command, "error": str(exc)}, 2, f"error: {exc}"
    report["engine_version"] = __version__
    text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    print(summary, file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
