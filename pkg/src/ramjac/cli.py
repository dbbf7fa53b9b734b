"""Command-line front end.

Presentations are single JSON documents::

    {
      "p": 3,
      "eisenstein": [-3, 0],          // a_0..a_{e-1}, ascending; monic implied
      "variables": ["x", "y"],
      "generators": ["x^2 - pi^2*y"],
      "height": 1,                    // optional
      "prime_ideal": ["x", "y"],      // optional, for regular-at / omega-check
      "point": [0, 0]                 // optional, for point commands
    }

Commands: locus, regular-at, oracle-scan, cross-validate, derive, groebner,
omega-check, pdegree.  Exit codes: 0 success, 1 mathematical precondition
failure, 2 malformed input.  Output is deterministic; ``--json`` switches
to machine-readable form.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .arith import LocalRationals, PrimeField, is_prime
from .calculus import d_dpi, delta_p
from .criterion import (
    RingPresentation,
    cross_validate,
    hj_singular_locus,
    is_regular_at,
    kunz_pdegree,
    omega_free_rank_check,
    singular_locus_at_p,
)
from .dvr import EisensteinDVR
from .errors import InputError, PreconditionError, RamjacError
from .groebner import Ideal
from .oracle import scan_rational_points
from .poly import MonomialOrder, PolynomialRing

EXIT_OK = 0
EXIT_PRECONDITION = 1
EXIT_INPUT = 2


def _schema_error(msg: str):
    raise InputError(f"presentation document: {msg}")


def _as_fraction(value, where: str) -> Fraction:
    if isinstance(value, bool):
        _schema_error(f"{where} must be an integer or a rational string")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError):
            _schema_error(f"{where}: {value!r} is not a rational number")
    _schema_error(f"{where} must be an integer or a rational string")


def load_document(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            doc = json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        _schema_error("top level must be an object")
    return doc


def validate_document(doc: dict) -> dict:
    known = {"p", "eisenstein", "variables", "generators", "height", "prime_ideal", "point"}
    for key in doc:
        if key not in known:
            _schema_error(f"unknown field {key!r}")
    for field in ("p", "eisenstein", "variables", "generators"):
        if field not in doc:
            _schema_error(f"missing required field {field!r}")
    p = doc["p"]
    if not isinstance(p, int) or isinstance(p, bool) or not is_prime(p):
        _schema_error(f"field 'p' must be a prime integer, got {p!r}")
    eis = doc["eisenstein"]
    if not isinstance(eis, list) or not eis:
        _schema_error("field 'eisenstein' must be a non-empty list of coefficients")
    coeffs = [_as_fraction(c, f"eisenstein[{i}]") for i, c in enumerate(eis)]
    variables = doc["variables"]
    if (
        not isinstance(variables, list)
        or not variables
        or not all(isinstance(v, str) and v.isidentifier() for v in variables)
    ):
        _schema_error("field 'variables' must be a list of identifier strings")
    if len(set(variables)) != len(variables):
        _schema_error("variable names must be distinct")
    if "pi" in variables:
        _schema_error("'pi' is reserved for the uniformizer")
    generators = doc["generators"]
    if not isinstance(generators, list) or not all(
        isinstance(g, str) for g in generators
    ):
        _schema_error("field 'generators' must be a list of expression strings")
    height = doc.get("height")
    if height is not None and (isinstance(height, bool) or not isinstance(height, int)):
        _schema_error(f"field 'height' must be an integer, got {height!r}")
    prime_ideal = doc.get("prime_ideal")
    if prime_ideal is not None and (
        not isinstance(prime_ideal, list)
        or not all(isinstance(g, str) for g in prime_ideal)
    ):
        _schema_error("field 'prime_ideal' must be a list of expression strings")
    point = doc.get("point")
    if point is not None and (
        not isinstance(point, list)
        or not all(isinstance(v, int) and not isinstance(v, bool) for v in point)
    ):
        _schema_error("field 'point' must be a list of integers")
    return {
        "p": p,
        "eisenstein": coeffs,
        "variables": tuple(variables),
        "generators": list(generators),
        "height": height,
        "prime_ideal": prime_ideal,
        "point": point,
    }


def build_presentation(doc: dict, height_flag: int | None) -> RingPresentation:
    dvr = EisensteinDVR(doc["p"], tuple(doc["eisenstein"]))
    height = height_flag if height_flag is not None else doc["height"]
    return RingPresentation(dvr, doc["variables"], doc["generators"], height=height)


def make_order(name: str) -> MonomialOrder:
    return MonomialOrder(name)


def _emit(args, payload: dict, human: str):
    if args.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def _locus_payload(report):
    return {
        "locus": [str(g) for g in report.basis.polys],
        "empty": report.is_empty,
        "height": report.used_height,
        "height_source": report.height_source,
    }


def _locus_human(title: str, report) -> str:
    return (
        f"{title}\n"
        f"  height used: {report.used_height} ({report.height_source})\n"
        f"  locus ideal: {report.basis}\n"
        f"  empty: {str(report.is_empty).lower()}"
    )


def cmd_locus(args) -> int:
    doc = validate_document(load_document(args.file))
    pres = build_presentation(doc, args.height)
    report = singular_locus_at_p(pres, order=make_order(args.order))
    _emit(args, _locus_payload(report), _locus_human("singular locus along V(p):", report))
    return EXIT_OK


def _prime_ideal_gens(args, doc) -> list[str]:
    if args.ideal:
        return list(args.ideal)
    if doc["prime_ideal"] is not None:
        return list(doc["prime_ideal"])
    raise InputError(
        "no prime ideal supplied: pass generators as arguments or set "
        "'prime_ideal' in the document"
    )


def cmd_regular_at(args) -> int:
    doc = validate_document(load_document(args.file))
    pres = build_presentation(doc, args.height)
    gens = _prime_ideal_gens(args, doc)
    verdict = is_regular_at(pres, gens)
    _emit(
        args,
        {"regular": verdict, "prime_ideal": gens},
        f"regular: {str(verdict).lower()}",
    )
    return EXIT_OK


def cmd_oracle_scan(args) -> int:
    doc = validate_document(load_document(args.file))
    pres = build_presentation(doc, args.height)
    entries = scan_rational_points(pres)
    if args.json:
        payload = {
            "points": [
                {
                    "point": list(e.point),
                    "on_fiber": e.on_fiber,
                    "regular": e.regular,
                }
                for e in entries
            ]
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        lines = ["oracle scan of rational points:"]
        for e in entries:
            coords = ", ".join(str(c) for c in e.point)
            if e.on_fiber:
                verdict = "regular" if e.regular else "singular"
                lines.append(f"  ({coords}): on fiber, {verdict}")
            else:
                lines.append(f"  ({coords}): off fiber")
        print("\n".join(lines))
    return EXIT_OK


def cmd_cross_validate(args) -> int:
    doc = validate_document(load_document(args.file))
    pres = build_presentation(doc, args.height)
    agree = cross_validate(pres)
    _emit(args, {"agree": agree}, f"agree: {str(agree).lower()}")
    return EXIT_OK


def cmd_derive(args) -> int:
    doc = validate_document(load_document(args.file))
    if args.by == "delta-p":
        ring = PolynomialRing(LocalRationals(doc["p"]), doc["variables"])
        result = delta_p(ring.parse(args.expression))
    else:
        pres = build_presentation(doc, None)
        f = pres.ring.parse(args.expression)
        if args.by == "pi":
            result = d_dpi(f)
        else:
            result = f.partial_derivative(args.by)
    _emit(args, {"result": str(result)}, str(result))
    return EXIT_OK


def _inline_fiber_ring(args) -> PolynomialRing:
    if args.p is None or args.vars is None:
        raise InputError("inline mode needs both --p and --vars")
    if not is_prime(args.p):
        raise InputError(f"--p must be prime, got {args.p}")
    names = tuple(v.strip() for v in args.vars.split(",") if v.strip())
    if not names or not all(v.isidentifier() for v in names):
        raise InputError(f"--vars must be a comma-separated list of names, got {args.vars!r}")
    return PolynomialRing(PrimeField(args.p), names)


def cmd_groebner(args) -> int:
    order = make_order(args.order)
    if args.file is not None:
        doc = validate_document(load_document(args.file))
        pres = build_presentation(doc, None)
        ring = pres.fiber_ring
        gens = list(pres.fiber_generators)
        if args.gens:
            raise InputError("give either a presentation file or inline --gens, not both")
    else:
        ring = _inline_fiber_ring(args)
        gens = [ring.parse(g) for g in args.gens or []]
    basis = Ideal(ring, gens).groebner(order)
    _emit(
        args,
        {"basis": [str(g) for g in basis.polys], "order": args.order},
        f"reduced basis ({args.order}): {basis}",
    )
    return EXIT_OK


def cmd_pdegree(args) -> int:
    ring = _inline_fiber_ring(args)
    gens = [ring.parse(g) for g in args.gens or []]
    value = kunz_pdegree(Ideal(ring, gens))
    _emit(args, {"pdegree": value}, str(value))
    return EXIT_OK


def cmd_omega_check(args) -> int:
    doc = validate_document(load_document(args.file))
    pres = build_presentation(doc, args.height)
    gens = _prime_ideal_gens(args, doc)
    result = omega_free_rank_check(pres, gens)
    payload = {
        "free": result.free,
        "rank": result.rank,
        "dim_R": result.dim_r,
        "b": result.b,
    }
    human = (
        f"free: {str(result.free).lower()}\n"
        f"rank: {result.rank}\n"
        f"dim_R: {result.dim_r}\n"
        f"b: {result.b}"
    )
    _emit(args, payload, human)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ramjac",
        description=(
            "Singular loci along V(p) for algebras over ramified discrete "
            "valuation rings, by the mixed Jacobian criterion."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def presentation_command(name, help_text, func, ideal_args=False):
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("file", help="presentation JSON document")
        cmd.add_argument("--height", type=int, help="override the ideal height")
        cmd.add_argument("--json", action="store_true", help="structured output")
        if ideal_args:
            cmd.add_argument(
                "--ideal",
                nargs="+",
                metavar="GEN",
                help="generators of the prime ideal of the special fiber",
            )
        cmd.set_defaults(func=func)
        return cmd

    locus = presentation_command("locus", "singular locus along V(p)", cmd_locus)
    locus.add_argument("--order", choices=["lex", "grevlex"], default="grevlex")

    presentation_command(
        "regular-at", "regularity at a prime of the fiber", cmd_regular_at, ideal_args=True
    )
    presentation_command(
        "oracle-scan", "brute-force verdicts at all rational points", cmd_oracle_scan
    )
    presentation_command(
        "cross-validate",
        "agreement of the ramified and p-derivation routes",
        cmd_cross_validate,
    )
    presentation_command(
        "omega-check",
        "freeness and rank of the differential module at a prime",
        cmd_omega_check,
        ideal_args=True,
    )

    derive = sub.add_parser("derive", help="apply a derivation to an expression")
    derive.add_argument("file", help="presentation JSON document (fixes ring and p)")
    derive.add_argument("expression", help="polynomial expression to derive")
    derive.add_argument(
        "--by",
        required=True,
        metavar="WHICH",
        help="'pi' for d/dpi, 'delta-p' for the p-derivation, or a variable name",
    )
    derive.add_argument("--json", action="store_true", help="structured output")
    derive.set_defaults(func=cmd_derive)

    groebner = sub.add_parser(
        "groebner", help="reduced Groebner basis (file fiber ideal, or inline)"
    )
    groebner.add_argument("file", nargs="?", help="presentation JSON document")
    groebner.add_argument("--p", type=int, help="prime for inline mode")
    groebner.add_argument("--vars", help="comma-separated variables for inline mode")
    groebner.add_argument("--gens", nargs="*", metavar="GEN", help="inline generators")
    groebner.add_argument("--order", choices=["lex", "grevlex"], default="grevlex")
    groebner.add_argument("--json", action="store_true", help="structured output")
    groebner.set_defaults(func=cmd_groebner)

    pdegree = sub.add_parser(
        "pdegree", help="p-degree of the residue field of a prime of F_p[x]"
    )
    pdegree.add_argument("--p", type=int, required=True)
    pdegree.add_argument("--vars", required=True)
    pdegree.add_argument("--gens", nargs="*", metavar="GEN", help="ideal generators")
    pdegree.add_argument("--json", action="store_true", help="structured output")
    pdegree.set_defaults(func=cmd_pdegree)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except PreconditionError as exc:
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except RamjacError as exc:  # pragma: no cover - defensive
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
