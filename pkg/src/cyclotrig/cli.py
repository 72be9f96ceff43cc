"""Command line interface.

Exit codes: 0 when the claim holds, 1 when it fails, 2 on usage or parse
errors.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from .discover import DiscoveryConfig, discover
from .exact import CycloElem
from .expr import (
    Equation,
    LinearForm,
    ParseError,
    UnsupportedExpression,
    evaluate,
    lower,
    parse,
    parse_identity,
    render_identity,
    render_surd,
    render_terms,
)
from .gauss import GaussClass, SurdTarget, gauss_closed_form, gauss_sum, quadratic_residues
from .reduction import family_eleven, family_nine
from .verify import resolve_sign, verify

EXIT_HOLDS, EXIT_FAILS, EXIT_USAGE = 0, 1, 2


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, default=str))
    else:
        print(text)


def _identity_payload(ident) -> dict:
    return {
        "identity": render_identity(ident),
        "lhs": render_terms(ident.lhs),
        "rhs": render_surd(ident.rhs),
    }


def cmd_verify(args) -> int:
    ident = parse_identity(args.identity)
    res = verify(ident)
    payload = {
        "holds": res.holds,
        "field_order": res.field_order,
        "lhs": render_terms(ident.lhs),
        "rhs": render_surd(ident.rhs),
        "residual_zero": res.residual.is_zero(),
        "residual": str(res.residual),
        "numeric_residual": res.numeric_residual,
    }
    text = "\n".join(
        [
            f"{'HOLDS' if res.holds else 'FAILS'}: {render_identity(ident)}",
            f"field order L = {res.field_order}",
            f"residual is zero: {'yes' if res.residual.is_zero() else 'no'}",
        ]
        + ([] if res.holds else [f"residual = {res.residual}"])
    )
    _emit(args, payload, text)
    return EXIT_HOLDS if res.holds else EXIT_FAILS


def cmd_sign(args) -> int:
    form = lower(parse(args.lhs))
    if isinstance(form, SurdTarget):
        raise UnsupportedExpression("sign needs at least one trig term on the left")
    if isinstance(form, LinearForm):
        if form.surd.q:
            raise UnsupportedExpression("the left side must not contain a surd")
        terms = form.terms
    else:
        raise UnsupportedExpression("sign takes an expression, not an equation")
    sign = resolve_sign(terms, Fraction(args.q), args.surd)
    label = {1: "+", -1: "-", None: "none"}[sign]
    _emit(args, {"sign": label, "lhs": render_terms(terms), "q": str(args.q), "m": args.surd}, label)
    return EXIT_FAILS if sign is None else EXIT_HOLDS


def _gauss_row(n: int) -> tuple[bool, CycloElem, GaussClass]:
    g = gauss_sum(n)
    return g.embed(math.lcm(4, n)) == gauss_closed_form(n), g, GaussClass.of(n)


def cmd_gauss(args) -> int:
    if args.table:
        ok_all = True
        for n in range(1, args.table + 1):
            ok, g, cls = _gauss_row(n)
            ok_all &= ok
            _emit(
                args,
                {"n": n, "class": cls.value, "matches": ok},
                f"{n:4d}  {cls.value:<14} {'ok' if ok else 'MISMATCH'}",
            )
        return EXIT_HOLDS if ok_all else EXIT_FAILS
    ok, g, cls = _gauss_row(args.n)
    payload = {
        "n": args.n,
        "coeffs": [str(c) for c in g.coeffs],
        "class": cls.value,
        "matches": ok,
    }
    text = "\n".join(
        [
            f"G_{args.n} = {g}   (z = exp(2 pi i/{args.n}))",
            f"closed form class: {cls.value}",
            f"matches closed form exactly: {'yes' if ok else 'no'}",
        ]
    )
    _emit(args, payload, text)
    return EXIT_HOLDS if ok else EXIT_FAILS


def cmd_residues(args) -> int:
    res = quadratic_residues(args.n)
    _emit(args, {"n": args.n, "residues": res}, " ".join(map(str, res)))
    return EXIT_HOLDS


def cmd_families(args) -> int:
    ok = True
    for fam in (family_eleven(), family_nine()):
        if not args.json:
            print(fam.description)
            print("  sign table: " + ", ".join(
                f"{p.k}:{'+' if p.sign > 0 else '-'}" for p in fam.parameterization
            ))
        for ident in fam.members:
            holds = verify(ident).holds
            ok &= holds
            payload = {"family": fam.description, "holds": holds, **_identity_payload(ident)}
            _emit(args, payload, f"  {'HOLDS' if holds else 'FAILS'}: {render_identity(ident)}")
        if args.json:
            print(json.dumps({"family": fam.description,
                              "sign_table": {str(k): s for k, s in fam.sign_table().items()}}))
    return EXIT_HOLDS if ok else EXIT_FAILS


def _int_list(text: str) -> list[int]:
    return [int(x) for x in text.split(",") if x.strip()]


def _frac_list(text: str) -> list[Fraction]:
    return [Fraction(x.strip()) for x in text.split(",") if x.strip()]


def cmd_discover(args) -> int:
    cfg = DiscoveryConfig(
        denominators=_int_list(args.n),
        coeff_set=_frac_list(args.coeffs),
        max_sin_terms=args.max_sin,
        surd_candidates=_int_list(args.surd),
        q_candidates=_frac_list(args.q),
        prefilter_tol=args.tol,
        workers=args.workers,
    )
    report = discover(cfg)
    for ident in report.found:
        print(json.dumps({**_identity_payload(ident), "holds": True}))
    print(
        f"scanned {report.candidates_scanned}, prefilter passed {report.prefilter_pass}, "
        f"found {len(report.found)} in {report.elapsed:.2f}s",
        file=sys.stderr,
    )
    return EXIT_HOLDS


def cmd_eval(args) -> int:
    ast = parse(args.expr)
    if isinstance(ast, Equation):
        lv, rv = evaluate(ast.left), evaluate(ast.right)
        payload = {"lhs": lv, "rhs": rv, "difference": lv - rv, "certified": False}
        text = f"lhs = {lv!r}\nrhs = {rv!r}\ndifference = {lv - rv!r}  (double precision, not certified)"
    else:
        v = evaluate(ast)
        payload = {"value": v, "certified": False}
        text = f"{v!r}  (double precision, not certified)"
    _emit(args, payload, text)
    return EXIT_HOLDS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclotrig",
        description="Exact verification and discovery of tan/sin identities with surd values.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="verify 'lhs = rhs' exactly")
    p.add_argument("identity")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sign", parents=[common], help="find the sign s with lhs = s*q*sqrt(m)")
    p.add_argument("lhs")
    p.add_argument("--surd", type=int, required=True, metavar="M")
    p.add_argument("--q", default="1", metavar="R")
    p.set_defaults(func=cmd_sign)

    p = sub.add_parser("gauss", parents=[common], help="quadratic Gauss sum and its closed form")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--n", type=int)
    g.add_argument("--table", type=int, metavar="MAX", help="check every n in 1..MAX")
    p.set_defaults(func=cmd_gauss)

    p = sub.add_parser("residues", parents=[common], help="quadratic residues modulo n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_residues)

    p = sub.add_parser("families", parents=[common], help="regenerate the n=11 and n=9 families")
    p.set_defaults(func=cmd_families)

    p = sub.add_parser("discover", help="search for identities; JSON lines on stdout")
    p.add_argument("--n", required=True, metavar="LIST", help="comma-separated odd denominators")
    p.add_argument("--coeffs", default="4,-4", metavar="LIST")
    p.add_argument("--max-sin", type=int, default=1, metavar="K")
    p.add_argument("--surd", required=True, metavar="LIST")
    p.add_argument("--q", default="1,-1", metavar="LIST")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_discover, json=True)

    p = sub.add_parser("eval", parents=[common], help="double-precision value (diagnostic only)")
    p.add_argument("expr")
    p.set_defaults(func=cmd_eval)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, UnsupportedExpression, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
