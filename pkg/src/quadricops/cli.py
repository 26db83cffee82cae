"""Command-line interface: expression reduction, transforms, and suites.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import exprparse
from .coneops import ConeOp
from .harmonic import (bessel_check, boundary_phase_check,
                       harmonic_decompose, harmonic_dimension, kelvin,
                       kelvin_intertwine_defect, n2_counterexample)
from .lie import basis
from .momentorbit import check_descent, verify_orbit_relations
from .poly import Poly, QLaurent
from .shapovalov import (fourier_roots_bezout, shapovalov_closed,
                         shapovalov_expand)
from .suites import (CheckResult, SuiteReport, UnknownSuite, emit,
                     max_degree_cap, run_suite, SUITES)


def _emit_obj(obj: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        sys.stdout.write("\n".join(text_lines) + "\n")


def _usage_error(msg: str) -> int:
    sys.stderr.write(f"error: {msg}\n")
    return 2


def cmd_reduce(args) -> int:
    tree = exprparse.parse(args.expr, args.k)
    op = exprparse.eval_weyl(tree, args.k)
    cap = 2 * max_degree_cap()
    coef_degree = max((sum(a) for a, _ in op.terms), default=0)
    if op.order() > cap or coef_degree > cap:
        return _usage_error("expression exceeds the max-degree safety cap")
    cone = ConeOp(op)
    obj = {
        "expr": exprparse.to_text(tree),
        "k": args.k,
        "ambient": op.text(),
        "canonical_class": cone.canonical_text(),
        "canonical_json": cone.canonical_json(),
        "preserves_ideal": cone.preserves_ideal(),
        "zero_class": cone.is_zero_class(),
    }
    _emit_obj(obj, args.format, [
        f"expression: {obj['expr']}",
        f"ambient operator: {obj['ambient']}",
        f"canonical class: {obj['canonical_class']}",
        f"normalizes the cone ideal: {obj['preserves_ideal']}",
    ])
    return 0


def cmd_fourier_transform(args) -> int:
    tree = exprparse.parse(args.expr, args.k)
    word = exprparse.to_genword(tree, args.k)
    image = word.fourier()
    image_expr = exprparse.genword_to_expr_text(image, args.k)
    cone = image.eval()
    obj = {
        "expr": exprparse.to_text(tree),
        "k": args.k,
        "word": word.text(),
        "image_word": image.text(),
        "image_expr": image_expr,
        "image_canonical_class": cone.canonical_text(),
        "involution_ok": image.fourier() == word,
    }
    _emit_obj(obj, args.format, [
        f"expression: {obj['expr']}",
        f"generator word: {obj['word']}",
        f"Fourier image: {obj['image_word']}",
        f"image as expression: {obj['image_expr']}",
        f"image canonical class: {obj['image_canonical_class']}",
    ])
    return 0 if obj["involution_ok"] else 1


def cmd_shapovalov(args) -> int:
    d, k = args.d, args.k
    if d < 1:
        return _usage_error("--d must be at least 1")
    expanded = shapovalov_expand(d, k)
    closed = shapovalov_closed(d, k)
    a, b = fourier_roots_bezout(d, k)
    def _factor(shift: int) -> str:
        if shift == 0:
            return "E"
        return f"(E + {shift})" if shift > 0 else f"(E - {-shift})"
    factors = ([_factor(1 - j) for j in range(1, d + 1)]
               + [_factor(k - j - 1) for j in range(1, d + 1)])
    matches = expanded == ConeOp(closed.to_weyl(k))
    obj = {
        "d": d,
        "k": k,
        "expanded_class": expanded.canonical_text(),
        "closed_form": closed.text(),
        "closed_factored": " * ".join(factors),
        "bezout_a": a.text(),
        "bezout_b": b.text(),
        "expanded_equals_closed": matches,
    }
    _emit_obj(obj, args.format, [
        f"element (d={d}, k={k})",
        f"expanded canonical class: {obj['expanded_class']}",
        f"closed form: {obj['closed_form']} = {obj['closed_factored']}",
        f"Bezout pair: a = {obj['bezout_a']}; b = {obj['bezout_b']}",
        f"expanded equals closed: {matches}",
    ])
    return 0 if matches else 1


def cmd_moment(args) -> int:
    checks = []
    for name, ok, residue in verify_orbit_relations(args.k):
        checks.append(CheckResult(f"relation {name}",
                                  "orbit relation vanishes on the cone",
                                  ok, residue if not ok else ""))
    for xi in basis(args.k):
        defect = check_descent(xi)
        checks.append(CheckResult(f"descent {xi.tag}",
                                  "moment pairing is fiber-shear invariant",
                                  defect.is_zero(),
                                  defect.text() if not defect.is_zero() else ""))
    report = SuiteReport("moment-verify", args.k, checks)
    sys.stdout.write(emit(report, args.format).decode())
    return report.exit_status


def cmd_kelvin(args) -> int:
    tree = exprparse.parse(args.expr, args.k)
    op = exprparse.eval_weyl(tree, args.k)
    for (_, b) in op.terms:
        if any(b):
            return _usage_error("kelvin expects a polynomial expression "
                                "(no derivatives)")
    poly = Poly(2 * args.k, {a: c for (a, b), c in op.terms.items()})
    if poly.degree() > 2 * max_degree_cap():
        return _usage_error("polynomial exceeds the max-degree safety cap")
    f = QLaurent(args.k, poly, 0)
    kf = kelvin(f)
    defect = kelvin_intertwine_defect(f)
    obj = {
        "expr": exprparse.to_text(tree),
        "k": args.k,
        "kelvin": kf.text(),
        "involution_ok": kelvin(kf) == f,
        "intertwine_defect": defect.text(),
        "intertwine_ok": defect.is_zero(),
    }
    _emit_obj(obj, args.format, [
        f"f = {obj['expr']}",
        f"K f = {obj['kelvin']}",
        f"K K f = f: {obj['involution_ok']}",
        f"intertwine defect: {obj['intertwine_defect']}",
    ])
    return 0 if obj["involution_ok"] and obj["intertwine_ok"] else 1


def cmd_harmonic(args) -> int:
    d, k = args.d, args.k
    if d < 0:
        return _usage_error("--d must be nonnegative")
    if d > 2 * max_degree_cap():
        return _usage_error("--d exceeds the max-degree safety cap")
    harm, qmult = harmonic_decompose(d, k)
    expected = harmonic_dimension(d, k)
    obj = {
        "d": d,
        "k": k,
        "harmonic_dimension": len(harm),
        "expected_dimension": expected,
        "q_multiple_dimension": len(qmult),
        "harmonic_basis": [h.text() for h in harm],
        "ok": len(harm) == expected,
    }
    _emit_obj(obj, args.format, [
        f"degree {d}, k={k}",
        f"harmonic dimension: {len(harm)} (expected {expected})",
        f"complement dimension: {len(qmult)}",
        "harmonic basis:",
        *[f"  {h.text()}" for h in harm],
    ])
    return 0 if obj["ok"] else 1


def cmd_bessel(args) -> int:
    if args.order < 2:
        return _usage_error("--order must be at least 2")
    rep = bessel_check(args.k, args.order)
    ok = rep["residue_ok"] and rep["laplacian_zero"] and rep["euler_matches"]
    obj = {
        "k": args.k,
        "order": args.order,
        "coefficients": [{"num": c.numerator, "den": c.denominator}
                         for c in rep["coefficients"]],
        "residue_ok": rep["residue_ok"],
        "laplacian_zero": rep["laplacian_zero"],
        "euler_matches": rep["euler_matches"],
        "ok": ok,
    }
    _emit_obj(obj, args.format, [
        f"radial series, k={args.k}, truncation order {args.order}",
        "coefficients: " + ", ".join(str(c) for c in rep["coefficients"]),
        f"series residue vanishes below truncation: {rep['residue_ok']}",
        f"series is harmonic: {rep['laplacian_zero']}",
        f"Euler action matches t d/dt: {rep['euler_matches']}",
    ])
    return 0 if ok else 1


def cmd_boundary(args) -> int:
    rep = boundary_phase_check(args.k)
    obj = {
        "k": args.k,
        "linear_term": rep["linear_term"].text(),
        "quadratic_term": rep["quadratic_term"].text(),
        "cleared_phase": rep["cleared_phase"].text(),
        "ok": rep["ok"],
    }
    _emit_obj(obj, args.format, [
        f"boundary phase identities, k={args.k}",
        f"linear-term residue: {obj['linear_term']}",
        f"quadratic-term residue: {obj['quadratic_term']}",
        f"cleared-phase residue: {obj['cleared_phase']}",
        f"all hold: {rep['ok']}",
    ])
    return 0 if rep["ok"] else 1


def cmd_counterexample_n2(args) -> int:
    rep = n2_counterexample()
    ok = (rep["commutator_ok"] and not rep["xi_of_x_polynomial"]
          and rep["delta_of_x_zero"])
    obj = {
        "commutator_ok": rep["commutator_ok"],
        "xi_of_x": rep["xi_of_x"].text(),
        "xi_of_x_polynomial": rep["xi_of_x_polynomial"],
        "delta_of_x_zero": rep["delta_of_x_zero"],
        "ok": ok,
    }
    _emit_obj(obj, args.format, [
        "rank-one counterexample (plane with form x*y)",
        f"commutator law holds on Laurent monomials: {rep['commutator_ok']}",
        f"field applied to the coordinate: {obj['xi_of_x']} "
        f"(polynomial: {rep['xi_of_x_polynomial']})",
        f"Laplacian of the coordinate vanishes: {rep['delta_of_x_zero']}",
    ])
    return 0 if ok else 1


def cmd_verify(args) -> int:
    report = run_suite(args.suite, args.k)
    sys.stdout.write(emit(report, args.format).decode())
    return report.exit_status


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quadricops",
        description="Exact symbolic engine for differential operators on the "
                    "quadric cone.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_k=True):
        if with_k:
            p.add_argument("--k", type=int, default=2,
                           help="number of hyperbolic planes (default 2, min 2)")
        p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("reduce", help="canonical cone class of an expression")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("fourier-transform",
                       help="quadric Fourier image of a generator word")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=cmd_fourier_transform)

    p = sub.add_parser("shapovalov",
                       help="pairing element: expansion, closed form, Bezout pair")
    p.add_argument("--d", type=int, default=1)
    common(p)
    p.set_defaults(func=cmd_shapovalov)

    p = sub.add_parser("moment", help="verify moment descent and orbit relations")
    p.add_argument("action", nargs="?", choices=["verify"], default="verify")
    common(p)
    p.set_defaults(func=cmd_moment)

    p = sub.add_parser("kelvin", help="Kelvin transform of a polynomial")
    p.add_argument("expr")
    common(p)
    p.set_defaults(func=cmd_kelvin)

    p = sub.add_parser("harmonic", help="harmonic decomposition of a graded piece")
    p.add_argument("--d", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_harmonic)

    p = sub.add_parser("bessel", help="radial series check")
    p.add_argument("--order", type=int, default=12)
    common(p)
    p.set_defaults(func=cmd_bessel)

    p = sub.add_parser("boundary", help="boundary phase identities")
    common(p)
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("counterexample-n2",
                       help="rank-one counterexample identities")
    common(p, with_k=False)
    p.set_defaults(func=cmd_counterexample_n2)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", help="suite name or 'all': "
                   + ", ".join(sorted(SUITES) + ["all"]))
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    k = getattr(args, "k", 2)
    if k < 2:
        return _usage_error("--k must be at least 2")
    try:
        return args.func(args)
    except (exprparse.ParseError, IndexError) as exc:
        return _usage_error(f"parse error: {exc}")
    except exprparse.NotGeneratorWord as exc:
        return _usage_error(str(exc))
    except UnknownSuite as exc:
        return _usage_error(str(exc))
    except ValueError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
