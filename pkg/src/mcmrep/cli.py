"""Command-line front end.

Exit codes: 0 success, 1 validation/semantic error, 2 budget refusal,
3 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .families import (
    example_algebra_x2,
    generator_degree_spread,
    module_point_In,
    module_point_R,
    normalize_shifts,
    rank_over_S,
    three_orbit_representatives,
)
from .fields import GF, QQ
from .graded import (
    ShiftType,
    hilbert_polynomial,
    hilbert_series,
    hilbert_series_of_type,
    validate_presentation,
    verify_normalization,
)
from .groebner import component_monomials
from .orbits import (
    BudgetExceededError,
    InvariantViolationError,
    are_isomorphic,
    enumerate_points,
    group_order,
    is_indecomposable,
    orbit_partition,
)
from .parsing import AlgebraSemanticError, AlgebraSyntaxError, parse_algebra_file
from .repvariety import build_defining_ideal, evaluate, parameterize, validate_point

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_BUDGET = 2
EXIT_INTERNAL = 3


def _load_algebra(args):
    if getattr(args, "family", None):
        if args.family != "x2":
            raise SystemExit(f"unknown family {args.family!r}")
        return example_algebra_x2(_field(args))
    if getattr(args, "algebra", None):
        return parse_algebra_file(args.algebra)
    raise AlgebraSemanticError(["no algebra source given (use --family or --algebra)"])


def _field(args):
    spec = getattr(args, "field", None) or "Q"
    if spec == "Q":
        return QQ
    if spec.startswith("Fp:"):
        return GF(int(spec[3:]))
    raise AlgebraSemanticError([f"unknown field {spec!r} (use Q or Fp:<p>)"])


def _shifts(args) -> ShiftType:
    text = getattr(args, "shifts", None)
    if text is None:
        raise AlgebraSemanticError(["--shifts is required for this command"])
    if text.strip() == "":
        return ShiftType(())
    return ShiftType(tuple(int(p) for p in text.split(",")))


def _assignment(text):
    return [Fraction(p.strip()) for p in text.split(",")] if text.strip() else []


def _write_report(args, report):
    if getattr(args, "json", None):
        report = {"version": __version__, **report}
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(report, fh, indent=2)
            fh.write("\n")


# -- commands ------------------------------------------------------------


def cmd_validate(args):
    R = _load_algebra(args)
    problems = validate_presentation(R)
    normalized = not problems and verify_normalization(R)
    for p in problems:
        print(f"violation: {p}")
    if not problems:
        print(f"presentation: valid")
        print(f"normalization verified: {normalized}")
    _write_report(args, {
        "command": "validate",
        "violations": problems,
        "normalization_verified": normalized,
    })
    return EXIT_OK if not problems and normalized else EXIT_VALIDATION


def cmd_hilbert(args):
    R = _load_algebra(args)
    if validate_presentation(R):
        raise AlgebraSemanticError(validate_presentation(R))
    H = hilbert_series(R)
    D = args.degree_bound
    coeffs = H.expand(D)
    hp = hilbert_polynomial(H)
    print(f"series: {H}")
    print("coefficients (t^0..t^%d): %s" % (D, ", ".join(map(str, coeffs))))
    print("hilbert polynomial: " + _format_poly_in_i(hp))
    # consistency against standard monomial counts
    for d in range(D + 1):
        count = len(component_monomials(R.ring, R.relation_ideal(), d))
        if count != coeffs[d]:
            raise InvariantViolationError(
                f"series coefficient {coeffs[d]} != monomial count {count} at degree {d}"
            )
    _write_report(args, {
        "command": "hilbert",
        "numerator": list(H.numerator),
        "denominator": list(H.denominator),
        "coefficients": coeffs,
        "hilbert_polynomial": [str(c) for c in hp],
    })
    return EXIT_OK


def _format_poly_in_i(coeffs):
    if not coeffs:
        return "0"
    parts = []
    for k, c in enumerate(coeffs):
        if c == 0:
            continue
        parts.append(f"{c}" if k == 0 else (f"{c}*i^{k}" if k > 1 else f"{c}*i"))
    return " + ".join(parts) if parts else "0"


def cmd_repeqs(args):
    R = _load_algebra(args)
    V = _shifts(args)
    rep = build_defining_ideal(R, V, _field(args))
    ps = rep.parameter_space
    print(f"unknowns: {len(ps.unknowns)}")
    for u in ps.unknowns:
        print("  " + u.describe(R.normalization))
    print(f"generators: {len(rep.ideal.generators)}")
    for g in rep.ideal.generators:
        print(f"  {g}")
    _write_report(args, {
        "command": "repeqs",
        "unknowns": [
            {"name": u.name, "generator": u.generator, "row": u.row + 1,
             "col": u.col + 1, "monomial": list(u.monomial)}
            for u in ps.unknowns
        ],
        "generators": [str(g) for g in rep.ideal.generators],
    })
    return EXIT_OK


def cmd_check_point(args):
    R = _load_algebra(args)
    V = _shifts(args)
    ps = parameterize(R, V, _field(args))
    values = _assignment(args.point)
    pt = evaluate(ps, values)
    ok = validate_point(pt)
    print(f"valid point: {ok}")
    _write_report(args, {"command": "check-point", "valid": ok})
    return EXIT_OK if ok else EXIT_VALIDATION


def cmd_isom(args):
    R = _load_algebra(args)
    V = _shifts(args)
    ps = parameterize(R, V, _field(args))
    mu = evaluate(ps, _assignment(args.point1))
    nu = evaluate(ps, _assignment(args.point2))
    for name, pt in (("point1", mu), ("point2", nu)):
        if not validate_point(pt):
            print(f"{name} is not a valid point")
            return EXIT_VALIDATION
    result = are_isomorphic(mu, nu)
    print(f"isomorphic: {result}")
    _write_report(args, {"command": "isom", "isomorphic": result})
    return EXIT_OK


def cmd_indec(args):
    R = _load_algebra(args)
    V = _shifts(args)
    ps = parameterize(R, V, _field(args))
    pt = evaluate(ps, _assignment(args.point))
    if not validate_point(pt):
        print("point is not a valid point")
        return EXIT_VALIDATION
    result = is_indecomposable(pt)
    print(f"indecomposable: {result}")
    _write_report(args, {"command": "indec", "indecomposable": result})
    return EXIT_OK


def cmd_census(args):
    R = _load_algebra(args)
    V = _shifts(args)
    q = args.q
    rep = build_defining_ideal(R, V)
    points = enumerate_points(rep, q, args.budget)
    named = None
    if getattr(args, "family", None) == "x2" and V == ShiftType((0, 1)):
        named = three_orbit_representatives()
    census = orbit_partition(points, R, V, q, args.budget, named_reps=named)
    print(f"q = {q}: {census.point_count} points, |G_V| = {census.group_order}")
    print(f"orbits: {census.orbit_count}")
    for rec in census.orbits:
        label = f"  [{rec.label}]" if rec.label else ""
        print(
            f"  representative {list(rec.representative)}  size {rec.size}"
            f"  stabilizer {rec.stabilizer_order}{label}"
        )
    print(f"isomorphism classes: {census.isomorphism_class_count}")
    if census.counts_diverge:
        print("WARNING: orbit count and isomorphism-class count diverge")
    _write_report(args, {
        "command": "census",
        "q": q,
        "group_order": census.group_order,
        "point_count": census.point_count,
        "orbit_count": census.orbit_count,
        "orbits": [
            {"representative": list(r.representative), "size": r.size,
             "stabilizer_order": r.stabilizer_order, "label": r.label}
            for r in census.orbits
        ],
        "isomorphism_class_count": census.isomorphism_class_count,
        "counts_diverge": census.counts_diverge,
    })
    return EXIT_OK


def cmd_spread(args):
    V = _shifts(args)
    g_min, g_max, spread = generator_degree_spread(V)
    normalized, shift = normalize_shifts(V)
    print(f"g_min = {g_min}, g_max = {g_max}, spread = {spread}")
    print(f"rank over S: {rank_over_S(V)}")
    print(f"normalized type: {list(normalized.shifts)} (shift {shift})")
    _write_report(args, {
        "command": "spread",
        "g_min": g_min, "g_max": g_max, "spread": spread,
        "rank": rank_over_S(V),
        "normalized_type": list(normalized.shifts),
        "shift": shift,
    })
    return EXIT_OK


def cmd_family(args):
    if args.module == "R":
        named = module_point_R()
    elif args.module == "In":
        if args.n is None:
            raise AlgebraSemanticError(["--n is required for --module In"])
        named = module_point_In(args.n)
    else:
        raise AlgebraSemanticError([f"unknown module {args.module!r} (use R or In)"])
    ok = validate_point(named.point)
    indec = is_indecomposable(named.point)
    H = hilbert_series_of_type(named.point.algebra.normalization_degrees, named.type)
    print(f"module: {named.label}")
    print(f"type: {list(named.type.shifts)}")
    for row in named.point.matrices[0]:
        print("  [" + ", ".join(str(e) for e in row) + "]")
    print(f"valid: {ok}")
    print(f"indecomposable: {indec}")
    print(f"hilbert series: {H}")
    _write_report(args, {
        "command": "family",
        "label": named.label,
        "type": list(named.type.shifts),
        "matrix": [[str(e) for e in row] for row in named.point.matrices[0]],
        "valid": ok,
        "indecomposable": indec,
    })
    return EXIT_OK if ok else EXIT_VALIDATION


# -- argument plumbing -----------------------------------------------------


def _add_common(p, shifts=False, need_algebra=True):
    if need_algebra:
        p.add_argument("--family", help="built-in algebra preset (x2)")
        p.add_argument("--algebra", help="path to an algebra presentation file")
    p.add_argument("--field", default="Q", help="Q or Fp:<p> (default Q)")
    if shifts:
        p.add_argument("--shifts", help="comma-separated shift multiset, e.g. 0,1")
    p.add_argument("--json", help="write a machine-readable report to this path")
    p.add_argument("--degree-bound", type=int, default=12, dest="degree_bound")
    p.add_argument("--budget", type=int, default=10**7)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="mcmrep",
        description="Representation varieties of graded MCM modules: defining "
        "ideals, Hilbert series, isomorphism tests and finite-field orbit censuses. "
        "Shift convention: the type lists generator degrees l with V = (+) k(-l).",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a presentation")
    _add_common(p)
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("hilbert", help="Hilbert series and polynomial")
    _add_common(p)
    p.set_defaults(fn=cmd_hilbert)

    p = sub.add_parser("repeqs", help="defining ideal of the representation variety")
    _add_common(p, shifts=True)
    p.set_defaults(fn=cmd_repeqs)

    p = sub.add_parser("check-point", help="validate a concrete point")
    _add_common(p, shifts=True)
    p.add_argument("--point", required=True, help="comma-separated assignment values")
    p.set_defaults(fn=cmd_check_point)

    p = sub.add_parser("isom", help="decide isomorphism of two points")
    _add_common(p, shifts=True)
    p.add_argument("--point1", required=True)
    p.add_argument("--point2", required=True)
    p.set_defaults(fn=cmd_isom)

    p = sub.add_parser("indec", help="decide indecomposability of a point")
    _add_common(p, shifts=True)
    p.add_argument("--point", required=True)
    p.set_defaults(fn=cmd_indec)

    p = sub.add_parser("census", help="enumerate F_q points and orbits")
    _add_common(p, shifts=True)
    p.add_argument("--q", type=int, required=True)
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("spread", help="generator degree spread and rank of a type")
    _add_common(p, shifts=True, need_algebra=False)
    p.set_defaults(fn=cmd_spread)

    p = sub.add_parser("family", help="named module presets")
    _add_common(p)
    p.add_argument("--module", required=True, help="R or In")
    p.add_argument("--n", type=int)
    p.set_defaults(fn=cmd_family)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (AlgebraSyntaxError, AlgebraSemanticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except BudgetExceededError as exc:
        print(f"budget refusal: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except InvariantViolationError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
