"""Command-line front end.

Exit codes: 0 success, 2 input error, 3 internal inconsistency between
criteria that must agree.
"""

import argparse
import sys
import time
from fractions import Fraction

from . import __version__
from .chow import ChowClass, Pn, cap_fundamental, chern_der_log_snc, chern_splayed_combine, chern_tangent, one_plus, parse_ambient
from .csm import (
    PlaneCurve,
    csm_join,
    csm_snc_complement,
    verify_template_curves,
    verify_template_join,
    verify_template_product,
)
from .groebner import INFINITE
from .germs import (
    DivisorGerm,
    EngineInconsistency,
    PreconditionError,
    analyze_pair,
    is_euler_homogeneous,
    jacobian_ideal,
    log_derivations,
    milnor_number,
    saito_free_test,
    tjurina_number,
)
from .oracle import certified_milnor, certified_splayedness_dimension
from .parse import ParseError, parse, parse_vars
from .report import Report

VERBS = (
    "splayed",
    "logder",
    "free",
    "milnor",
    "euler-homog",
    "chern-snc",
    "csm-join",
    "csm-product",
    "csm-curves",
    "verify-template",
)


class InputError(ValueError):
    pass


def _rationals(text):
    try:
        return [Fraction(t.strip()) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad coefficient list {text!r}: {exc}") from None


def _ints(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise InputError(f"bad integer list {text!r}") from None


def _require(args, *names):
    missing = [n for n in names if getattr(args, n.replace("-", "_"), None) is None]
    if missing:
        raise InputError(f"{args.verb} needs " + ", ".join(f"--{n}" for n in missing))


def _polys(args, *names):
    _require(args, "vars", *names)
    vs = parse_vars(args.vars)
    out = []
    for n in names:
        text = getattr(args, n)
        try:
            out.append(parse(text, vs))
        except ParseError as exc:
            raise InputError(f"--{n}: {exc}") from None
    return vs, out


def _vector_str(v, names):
    parts = []
    for i, a in enumerate(v):
        if a:
            s = a.to_string(names)
            parts.append(f"({s})*d{names[i]}")
    return " + ".join(parts) or "0"


# -- verb handlers -----------------------------------------------------------------


def cmd_splayed(args):
    vs, (g, h) = _polys(args, "g", "h")
    rep = analyze_pair(g, h, freeness=not args.no_freeness)
    verdicts = {
        "leibniz": rep.leibniz_verdict,
        "der_span": rep.der_span_verdict,
        "strict_leibniz": rep.strict_verdict,
        "euler_homogeneous_g": rep.euler_homog_g,
        "euler_homogeneous_h": rep.euler_homog_h,
        "euler_homogeneous_gh": rep.euler_homog_gh,
        "free_g": rep.free_g,
        "free_h": rep.free_h,
        "free_gh": rep.free_gh,
    }
    dims = {
        "splayedness_module": rep.spla_dimension,
        "strict_quotient": rep.strict_dimension,
    }
    data = {}
    if rep.witness is not None:
        data["witness"] = f"d{vs[rep.witness]}"
    diagnostics = list(rep.diagnostics)
    if args.truncation_degree is not None:
        value, degree = certified_splayedness_dimension(g, h, start=args.truncation_degree)
        dims["oracle_splayedness_module"] = value if value is not None else "uncertified"
        dims["oracle_degree"] = degree
        if value is None:
            diagnostics.append("truncated-series oracle did not certify (non-isolated singularity)")
        elif value != rep.spla_dimension:
            raise EngineInconsistency(
                f"oracle gives splayedness dimension {value}, engine {rep.spla_dimension}"
            )
    return Report(
        "splayed",
        {"vars": vs, "g": args.g, "h": args.h},
        verdicts=verdicts,
        dimensions=dims,
        diagnostics=diagnostics,
        data=data,
    )


def cmd_logder(args):
    vs, (f,) = _polys(args, "f")
    mod = log_derivations(DivisorGerm.from_poly(f))
    return Report(
        "logder",
        {"vars": vs, "f": args.f},
        dimensions={"minimal_generators": len(mod.generators)},
        data={"generators": [_vector_str(v, vs) for v in mod.generators]},
    )


def cmd_free(args):
    vs, (f,) = _polys(args, "f")
    germ = DivisorGerm.from_poly(f)
    mod = log_derivations(germ)
    return Report(
        "free",
        {"vars": vs, "f": args.f},
        verdicts={"free": saito_free_test(germ, mod)},
        dimensions={"minimal_generators": len(mod.generators)},
    )


def cmd_milnor(args):
    vs, (f,) = _polys(args, "f")
    if f.constant_term() != 0:
        raise InputError("f must vanish at the origin")
    dims = {"milnor": milnor_number(f), "tjurina": tjurina_number(f)}
    if args.truncation_degree is not None and dims["milnor"] != INFINITE:
        value, degree = certified_milnor(f, start=args.truncation_degree)
        dims["oracle_milnor"] = value if value is not None else "uncertified"
        dims["oracle_degree"] = degree
        if value is not None and value != dims["milnor"]:
            raise EngineInconsistency(f"oracle Milnor number {value} vs engine {dims['milnor']}")
    return Report("milnor", {"vars": vs, "f": args.f}, dimensions=dims)


def cmd_euler_homog(args):
    vs, (f,) = _polys(args, "f")
    if f.constant_term() != 0:
        raise InputError("f must vanish at the origin")
    verdict = is_euler_homogeneous(f)
    return Report(
        "euler-homog",
        {"vars": vs, "f": args.f},
        verdicts={"euler_homogeneous": verdict},
        data={"jacobian_ideal": [p.to_string(vs) for p in jacobian_ideal(f).generators]},
    )


def _ambient(args):
    _require(args, "ambient")
    try:
        return parse_ambient(args.ambient)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def cmd_chern_snc(args, verb="chern-snc"):
    amb = _ambient(args)
    _require(args, "degrees")
    degrees = _ints(args.degrees)
    if len(amb.dims) != 1:
        raise InputError("chern-snc works on a single projective space")
    if not degrees or any(d < 1 for d in degrees):
        raise InputError("--degrees must be positive integers")
    c = chern_der_log_snc(amb, degrees)
    # the splayed-combination induction over the components
    comb = chern_tangent(amb) / one_plus(degrees[0], amb)
    for d in degrees[1:]:
        comb = chern_splayed_combine(comb, chern_tangent(amb) / one_plus(d, amb), amb)
    holds = comb == c
    if not holds:
        raise EngineInconsistency("iterated splayed combination differs from the SNC formula")
    csm = csm_snc_complement(amb.dims[0], degrees)
    return Report(
        verb,
        {"ambient": args.ambient, "degrees": degrees},
        verdicts={"combination_matches_snc": holds},
        classes={"c_der_log": c.to_list(), "csm_complement": csm.to_cohomology().to_list()},
        dimensions={"euler_characteristic_complement": csm.integral()},
    )


def cmd_csm_join(args, verb="csm-join"):
    _require(args, "alpha", "beta", "m", "n")
    alpha, beta = _rationals(args.alpha), _rationals(args.beta)
    try:
        v = verify_template_join(alpha, beta, args.m, args.n)
        j = csm_join(alpha, beta, args.m, args.n)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    if not v.holds:
        raise EngineInconsistency("join template identity failed")
    return Report(
        verb,
        {"alpha": alpha, "beta": beta, "m": args.m, "n": args.n},
        verdicts={"template_holds": v.holds},
        classes={
            "csm_join": j.to_cohomology().to_list(),
            "lhs": v.lhs.to_cohomology().to_list(),
            "rhs": v.rhs.to_cohomology().to_list(),
            "discrepancy": v.discrepancy.to_cohomology().to_list(),
        },
        dimensions={"euler_characteristic_join": j.integral()},
    )


def cmd_csm_product(args, verb="csm-product"):
    _require(args, "a", "b", "c1", "c2")
    c1, c2 = _rationals(args.c1), _rationals(args.c2)
    if len(c1) > args.a + 1 or len(c2) > args.b + 1:
        raise InputError("class has more coefficients than the projective space allows")
    x1 = cap_fundamental(ChowClass.from_list(Pn(args.a), c1))
    x2 = cap_fundamental(ChowClass.from_list(Pn(args.b), c2))
    v = verify_template_product(x1, x2)
    if not v.holds:
        raise EngineInconsistency("product template identity failed")
    return Report(
        verb,
        {"a": args.a, "b": args.b, "c1": c1, "c2": c2},
        verdicts={"template_holds": v.holds},
        classes={
            "lhs": v.lhs.to_cohomology().to_list(),
            "rhs": v.rhs.to_cohomology().to_list(),
            "discrepancy": v.discrepancy.to_cohomology().to_list(),
        },
        dimensions={"grid": [args.a + 1, args.b + 1]},
    )


def cmd_csm_curves(args, verb="csm-curves"):
    vs, (f1, f2) = _polys(args, "f1", "f2")
    if len(vs) != 3:
        raise InputError("plane curves need exactly three variables")
    try:
        c1, c2 = PlaneCurve(f1), PlaneCurve(f2)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    v = verify_template_curves(c1, c2, seed=args.seed)
    d = v.details
    return Report(
        verb,
        {"vars": vs, "f1": args.f1, "f2": args.f2},
        verdicts={"template_holds": v.holds, "splayed": d["splayed"]},
        classes={
            "lhs": v.lhs.to_cohomology().to_list(),
            "rhs": v.rhs.to_cohomology().to_list(),
            "discrepancy": v.discrepancy.to_cohomology().to_list(),
        },
        dimensions={
            "degrees": list(d["degrees"]),
            "euler_characteristics": list(d["euler_characteristics"]),
            "intersection_multiplicity": d["intersection_multiplicity"],
            "distinct_points": d["distinct_points"],
            "excess": d["excess"],
        },
    )


def cmd_verify_template(args):
    _require(args, "kind")
    handler = {
        "join": cmd_csm_join,
        "product": cmd_csm_product,
        "curves": cmd_csm_curves,
        "snc": cmd_chern_snc,
    }[args.kind]
    rep = handler(args, verb="verify-template")
    rep.inputs["kind"] = args.kind
    return rep


HANDLERS = {
    "splayed": cmd_splayed,
    "logder": cmd_logder,
    "free": cmd_free,
    "milnor": cmd_milnor,
    "euler-homog": cmd_euler_homog,
    "chern-snc": cmd_chern_snc,
    "csm-join": cmd_csm_join,
    "csm-product": cmd_csm_product,
    "csm-curves": cmd_csm_curves,
    "verify-template": cmd_verify_template,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for random coordinate changes")
    common.add_argument("--out", help="also write the JSON report to this file")
    common.add_argument("--truncation-degree", type=int, dest="truncation_degree",
                        help="cross-check against the truncated power-series oracle")
    common.add_argument("--timing", action="store_true", help="record wall time in the report")

    parser = argparse.ArgumentParser(prog="splayed", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="verb", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    p = add("splayed", "decide splayedness of g=0 and h=0 at the origin")
    p.add_argument("--vars")
    p.add_argument("--g")
    p.add_argument("--h")
    p.add_argument("--no-freeness", action="store_true", dest="no_freeness")

    for name, text in (
        ("logder", "logarithmic derivations of f=0 at the origin"),
        ("free", "Saito freeness of f=0 at the origin"),
        ("milnor", "Milnor and Tjurina numbers at the origin"),
        ("euler-homog", "is f Euler-homogeneous at the origin"),
    ):
        p = add(name, text)
        p.add_argument("--vars")
        p.add_argument("--f")

    def snc_args(p):
        p.add_argument("--ambient")
        p.add_argument("--degrees")

    def join_args(p):
        p.add_argument("--alpha", help="coefficients of csm(X1) in powers of H, e.g. 0,2")
        p.add_argument("--beta")
        p.add_argument("--m", type=int)
        p.add_argument("--n", type=int)

    def product_args(p):
        p.add_argument("--a", type=int)
        p.add_argument("--b", type=int)
        p.add_argument("--c1", help="coefficients of csm(X1) on P^a in powers of H")
        p.add_argument("--c2")

    def curve_args(p):
        p.add_argument("--vars")
        p.add_argument("--f1")
        p.add_argument("--f2")

    snc_args(add("chern-snc", "Chern class of Der(-log D) for SNC D in P^N"))
    join_args(add("csm-join", "csm class of a join and the template identity"))
    product_args(add("csm-product", "template identity on P^a x P^b"))
    curve_args(add("csm-curves", "template identity and splayedness for plane curves"))
    p = add("verify-template", "check the template identity for one situation")
    p.add_argument("--kind", choices=("join", "product", "curves", "snc"))
    snc_args(p)
    join_args(p)
    product_args(p)
    p.add_argument("--vars")
    p.add_argument("--f1")
    p.add_argument("--f2")
    return parser


def run(argv=None):
    """Run one command; return (exit code, Report or None)."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (exc.code if isinstance(exc.code, int) else 2), None
    start = time.perf_counter()
    try:
        report = HANDLERS[args.verb](args)
    except EngineInconsistency as exc:
        print(f"error: internal inconsistency: {exc}", file=sys.stderr)
        return 3, None
    except (InputError, PreconditionError, ParseError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2, None
    report.seed = args.seed
    if args.timing:
        report.timing = {"seconds": round(time.perf_counter() - start, 6)}
    text = report.to_json() if args.format == "json" else report.to_text()
    print(text)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report.to_json() + "\n")
    return 0, report


def main(argv=None):
    code, _ = run(argv)
    return code


if __name__ == "__main__":
    sys.exit(main())
