"""Named verification suites and deterministic report emission.

Each suite bundles the invariants of one module into a list of checks; the
suite names match the module names, plus the alias ``lie-hom`` for the
homomorphism block of ``cone-ops`` and the aggregate ``all``.  Reports are
deterministic for fixed inputs (seeded randomness, checks sorted by id) so
they can be used as golden files.

The environment variable ``QUADRICOPS_MAX_DEGREE`` caps the degree of the
symbolic test corpora (default 6).
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import exprparse
from .coneops import (ConeOp, GenWord, a_correction, grading, letter_op,
                      phi, rho_amb, rho_tilde, tau, xx_op, yy_op,
                      b_form_poly, d_op, b_op, c_op, euler_weight_op)
from .harmonic import (bessel_check, boundary_phase_check, dirac_relations,
                       exp_harmonicity_defect, harmonic_decompose,
                       harmonic_dimension, is_higher_symmetry, kelvin,
                       kelvin_intertwine_defect, n2_counterexample,
                       sym_monomials)
from .lie import act_at, basis, bruhat_factor, chi0_at, levi, u, u_op, w0
from .momentorbit import (check_descent, phase_euler, poisson, q_poly,
                          symbol_invariant, v_vector, verify_orbit_relations,
                          x_vector)
from .poly import (Poly, QLaurent, normal_form_mod_single, q_form,
                   reduce_mod)
from .shapovalov import (fourier_roots_bezout, scalar_on_graded,
                         shapovalov_closed, shapovalov_expand)
from .weyl import (LocalWeylOp, NotDivisible, WeylOp, euler_op,
                   is_zero_extensional, laplacian_op, monomials_up_to)


DEFAULT_MAX_DEGREE = 6


def max_degree_cap() -> int:
    raw = os.environ.get("QUADRICOPS_MAX_DEGREE", "")
    try:
        cap = int(raw)
    except ValueError:
        return DEFAULT_MAX_DEGREE
    return max(1, cap)


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    anchor: str
    ok: bool
    residue: str = ""


@dataclass
class SuiteReport:
    suite: str
    k: int
    checks: list = field(default_factory=list)

    def __post_init__(self):
        self.checks = sorted(self.checks, key=lambda c: c.check_id)

    @property
    def exit_status(self) -> int:
        return 0 if all(c.ok for c in self.checks) else 1

    def to_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "k": self.k,
            "checks": [
                {"id": c.check_id, "anchor": c.anchor, "ok": c.ok,
                 "residue": c.residue}
                for c in self.checks
            ],
            "exit_status": self.exit_status,
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SuiteReport":
        return cls(obj["suite"], obj["k"],
                   [CheckResult(c["id"], c["anchor"], c["ok"], c["residue"])
                    for c in obj["checks"]])

    def __eq__(self, other):
        if not isinstance(other, SuiteReport):
            return NotImplemented
        return (self.suite == other.suite and self.k == other.k
                and self.checks == other.checks)


class UnknownSuite(ValueError):
    pass


def emit(report: SuiteReport, fmt: str = "text") -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_json_obj(), indent=2, sort_keys=True)
                + "\n").encode()
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"suite: {report.suite} (k={report.k})"]
    for c in report.checks:
        mark = "PASS" if c.ok else "FAIL"
        line = f"[{mark}] {c.check_id}: {c.anchor}"
        if not c.ok and c.residue:
            line += f" | residue: {c.residue}"
        lines.append(line)
    lines.append(f"exit status: {report.exit_status}")
    return ("\n".join(lines) + "\n").encode()


def _clip(s: str, limit: int = 240) -> str:
    return s if len(s) <= limit else s[:limit] + "..."


def _check(check_id: str, anchor: str, ok: bool, residue: str = "") -> CheckResult:
    return CheckResult(check_id, anchor, bool(ok), "" if ok else _clip(residue))


def _rand_poly(rng: random.Random, nvars: int, deg: int, nterms: int = 5) -> Poly:
    terms = {}
    for _ in range(nterms):
        m = [0] * nvars
        for _ in range(rng.randint(0, deg)):
            m[rng.randrange(nvars)] += 1
        terms[tuple(m)] = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
    return Poly(nvars, {m: c for m, c in terms.items() if c})


def _rand_weyl(rng: random.Random, nvars: int, deg: int = 3, nterms: int = 4) -> WeylOp:
    terms = {}
    for _ in range(nterms):
        a = [0] * nvars
        b = [0] * nvars
        for _ in range(rng.randint(0, deg)):
            a[rng.randrange(nvars)] += 1
        for _ in range(rng.randint(0, deg)):
            b[rng.randrange(nvars)] += 1
        terms[(tuple(a), tuple(b))] = Fraction(rng.randint(-6, 6), rng.randint(1, 3))
    return WeylOp(nvars, {ab: c for ab, c in terms.items() if c})


# ---------------------------------------------------------------- algebra-core


def algebra_core_checks(k: int) -> list:
    rng = random.Random(100 + k)
    n = 2 * k
    deg = min(6, max_degree_cap())
    qs = q_form(k)
    out = []

    ok, res = True, ""
    for _ in range(20):
        a, b, c = (_rand_poly(rng, n, deg) for _ in range(3))
        if (a * b) * c != a * (b * c) or a * (b + c) != a * b + a * c:
            ok, res = False, f"a={a.text()} b={b.text()} c={c.text()}"
            break
    out.append(_check("ring-axioms",
                      "associativity and distributivity on random sparse polynomials",
                      ok, res))

    ok, res = True, ""
    for _ in range(20):
        p = _rand_poly(rng, n, deg)
        r = normal_form_mod_single(p, qs)[1]
        r2 = normal_form_mod_single(r, qs)[1]
        if r != r2:
            ok, res = False, f"p={p.text()}"
            break
    out.append(_check("normal-form-idempotent",
                      "the single-divisor normal form of a normal form is itself",
                      ok, res))

    ok, res = True, ""
    for _ in range(20):
        p = _rand_poly(rng, n, deg)
        r = normal_form_mod_single(qs * p, qs)[1]
        if not r.is_zero():
            ok, res = False, f"p={p.text()} r={r.text()}"
            break
    out.append(_check("exact-divisibility",
                      "multiples of the dual quadratic form reduce to zero",
                      ok, res))

    ok, res = True, ""
    for _ in range(20):
        p = _rand_poly(rng, n, deg)
        j = rng.randint(1, 3)
        m = rng.randint(0, 2)
        a = QLaurent(k, p * qs ** (j + m), j + m)
        b = QLaurent(k, p * qs ** m, m)
        if a != b:
            ok, res = False, f"p={p.text()} j={j} m={m}"
            break
    out.append(_check("qlaurent-normalization",
                      "two representations of the same Q-Laurent value normalize identically",
                      ok, res))
    return out


# ------------------------------------------------------------------------ weyl


def weyl_checks(k: int) -> list:
    rng = random.Random(200 + k)
    n = 2 * k
    deg = min(3, max_degree_cap())
    qs = q_form(k)
    lap = laplacian_op(k)
    out = []

    ok, res = True, ""
    for _ in range(10):
        a, b, c = (_rand_weyl(rng, n, deg) for _ in range(3))
        if (a * b) * c != a * (b * c):
            ok, res = False, "associativity failed on a random triple"
            break
    out.append(_check("weyl-associativity",
                      "operator composition is associative on random triples",
                      ok, res))

    ok, res = True, ""
    for _ in range(10):
        a, b = _rand_weyl(rng, n, deg), _rand_weyl(rng, n, deg)
        f = _rand_poly(rng, n, deg)
        if (a * b).apply(f) != a.apply(b.apply(f)):
            ok, res = False, "module action failed: (ab)f != a(bf)"
            break
    out.append(_check("weyl-module-action",
                      "applying a composite equals applying the factors in order",
                      ok, res))

    ok, res = True, ""
    for _ in range(10):
        a = _rand_weyl(rng, n, deg)
        if WeylOp.from_dleft(n, a.dleft()) != a:
            ok, res = False, "round trip through derivative-left form failed"
            break
    out.append(_check("weyl-normal-order-roundtrip",
                      "x-left and derivative-left normal forms are inverse presentations",
                      ok, res))

    ok, res = True, ""
    for _ in range(10):
        a = _rand_weyl(rng, n, deg, nterms=3)
        w = a * WeylOp.mult(qs)
        quo = w.divide_right_by_mult(qs)
        if quo * WeylOp.mult(qs) != w:
            ok, res = False, "right division by the form did not multiply back"
            break
        w2 = a * lap
        quo2 = w2.divide_right_by_constcoef(lap)
        if quo2 * lap != w2:
            ok, res = False, "right division by the Laplacian did not multiply back"
            break
    out.append(_check("weyl-division-multiply-back",
                      "both one-sided divisions reproduce the dividend exactly",
                      ok, res))

    ok, res = True, ""
    count = 0
    while count < 10:
        a, b = _rand_weyl(rng, n, deg), _rand_weyl(rng, n, deg)
        ab = a * b
        if a.is_zero() or b.is_zero() or ab.order() != a.order() + b.order():
            continue
        count += 1
        if ab.principal_symbol() != a.principal_symbol() * b.principal_symbol():
            ok, res = False, "symbol of a product is not the product of symbols"
            break
    out.append(_check("weyl-symbol-multiplicative",
                      "principal symbols multiply when orders add",
                      ok, res))

    a = _rand_weyl(rng, n, deg)
    ok = is_zero_extensional(a - a) and not is_zero_extensional(lap)
    out.append(_check("weyl-extensional-determinacy",
                      "an operator vanishing on low-degree monomials is zero; the Laplacian is not",
                      ok, "determinacy test misclassified an operator"))
    return out


# -------------------------------------------------------------- lie-orthogonal


def lie_orthogonal_checks(k: int) -> list:
    rng = random.Random(300 + k)
    n = 2 * k
    bas = basis(k)
    out = []

    ok, res = True, ""
    for i, xi in enumerate(bas):
        for eta in bas[i:]:
            br = xi.bracket(eta)
            a, b = xi.matrix(), eta.matrix()
            comm = [[sum(a[r][l] * b[l][c] - b[r][l] * a[l][c]
                         for l in range(n + 2)) for c in range(n + 2)]
                    for r in range(n + 2)]
            if br.matrix() != comm:
                ok, res = False, f"pair {xi.tag} {eta.tag}"
                break
        if not ok:
            break
    out.append(_check("lie-block-bracket",
                      "block-coordinate bracket equals the full matrix commutator on all basis pairs",
                      ok, res))

    # sampled rational group elements and points for the character cocycle
    def rand_h():
        # diagonal middle-block element preserving the split form
        d = [Fraction(rng.randint(1, 4), rng.randint(1, 3)) for _ in range(k)]
        h = [[Fraction(0)] * n for _ in range(n)]
        for i in range(k):
            h[i][i] = d[i]
            h[n - 1 - i][n - 1 - i] = 1 / d[i]
        return h

    gens = [w0(k),
            u(k, [rng.randint(-2, 2) for _ in range(n)]),
            u_op(k, [rng.randint(-2, 2) for _ in range(n)]),
            levi(k, Fraction(3, 2), rand_h())]
    gens.append(gens[0] * gens[1])
    gens.append(gens[3] * gens[2])
    ok, res = True, ""
    tried = 0
    for g1 in gens:
        for g2 in gens:
            g12 = g1 * g2
            for _ in range(4):
                v = [Fraction(rng.randint(-3, 3), rng.randint(1, 2))
                     for _ in range(n)]
                try:
                    v1 = act_at(g1, v)
                    lhs = chi0_at(g12, v)
                    rhs = chi0_at(g2, v1) * chi0_at(g1, v)
                except Exception:
                    continue  # outside the big cell for this sample
                tried += 1
                if lhs != rhs:
                    ok, res = False, f"g1,g2 sample with v={v}"
                    break
            if not ok:
                break
        if not ok:
            break
    ok = ok and tried >= 20
    out.append(_check("lie-cocycle",
                      "the conformal character is multiplicative along the rational action",
                      ok, res or f"only {tried} in-cell samples"))

    vprime, chi = bruhat_factor(w0(k))
    expected = [QLaurent(k, Poly.var(n, i, -1), 1) for i in range(n)]
    ok = vprime == expected
    out.append(_check("lie-w0-inversion",
                      "the big-cell factorization of the Weyl element is v -> -v/Q(v)",
                      ok, "w0 factorization mismatch"))
    return out


# -------------------------------------------------------------------- cone-ops


def _rho_tilde_table(k: int):
    bas = basis(k)
    return bas, [rho_tilde(xi) for xi in bas]


def lie_hom_checks(k: int, table=None) -> list:
    bas, images = table if table is not None else _rho_tilde_table(k)
    ok, res = True, ""
    bad = 0
    for i, xi in enumerate(bas):
        for j in range(i + 1, len(bas)):
            eta = bas[j]
            lhs = rho_tilde(xi.bracket(eta))
            rhs = images[i].commutator(images[j])
            if lhs != rhs:
                bad += 1
                if ok:
                    ok, res = False, f"first failing pair {xi.tag} {eta.tag}"
    return [_check("cone-lie-homomorphism",
                   "the corrected realization preserves brackets on all basis pairs",
                   ok, res)]


def cone_ops_checks(k: int, with_lie_hom: bool = True) -> list:
    rng = random.Random(400 + k)
    n = 2 * k
    qs = q_form(k)
    bas, images = _rho_tilde_table(k)
    out = []

    if with_lie_hom:
        out.extend(lie_hom_checks(k, (bas, images)))

    ok, res = True, ""
    for xi in bas:
        if tau(phi(xi)) != rho_amb(xi):
            ok, res = False, f"element {xi.tag}"
            break
    out.append(_check("cone-fourier-bridge",
                      "the letterwise Fourier transform of the vector-field realization "
                      "is the ambient dual realization, full basis", ok, res))

    ok, res = True, ""
    for xi in bas:
        ra = rho_amb(xi)
        defect = (WeylOp.mult(qs) * ra
                  - (ra - a_correction(xi)) * WeylOp.mult(qs))
        if not defect.is_zero():
            ok, res = False, f"element {xi.tag}: {_clip(defect.text())}"
            break
    out.append(_check("cone-conjugation-identity",
                      "conjugating the ambient realization by the form costs exactly "
                      "the first-order correction, full basis", ok, res))

    ok, res = True, ""
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            c = ConeOp(xx_op(k, i).commutator(yy_op(k, j)))
            if not c.is_zero_class():
                ok, res = False, f"[XX{i},YY{j}] = {c.canonical_text()}"
                break
        if not ok:
            break
    out.append(_check("cone-xxyy-commute",
                      "the second-order coordinate images commute pairwise in canonical class",
                      ok, res))

    total = WeylOp.zero(n)
    for i in range(1, k + 1):
        total = total + xx_op(k, i) * yy_op(k, k + 1 - i)
    fund = ConeOp(total)
    out.append(_check("cone-fundamental-relation",
                      "the contracted product of the second-order images is the zero class",
                      fund.is_zero_class(), fund.canonical_text()))

    letters = [("Etil",)]
    for i in range(1, k + 1):
        letters += [("x", i), ("y", i), ("XX", i), ("YY", i)]
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            letters.append(("D", i, j))
            if i < j:
                letters += [("B", i, j), ("C", i, j)]
    ok, res = True, ""
    for idx in range(500):
        nterms = rng.randint(1, 3)
        terms = {}
        for _ in range(nterms):
            word = tuple(rng.choice(letters) for _ in range(rng.randint(0, 4)))
            terms[word] = Fraction(rng.randint(-5, 5) or 1)
        w = GenWord(k, terms)
        if w.fourier().fourier() != w:
            ok, res = False, f"word #{idx}: {w.text()}"
            break
    out.append(_check("cone-fourier-involution",
                      "the quadric Fourier automorphism squares to the identity "
                      "on 500 random generator words", ok, res))

    ok, res = True, ""
    for letter in letters:
        g = grading(ConeOp(letter_op(k, letter)))
        gf = grading(GenWord.letter(k, letter).fourier().eval())
        expected = {"x": 1, "y": 1, "XX": -1, "YY": -1}.get(letter[0], 0)
        if g != expected or gf != -expected:
            ok, res = False, f"letter {letter}: grading {g}, image grading {gf}"
            break
    out.append(_check("cone-grading-negation",
                      "generator letters are graded and the Fourier automorphism negates the degree",
                      ok, res))

    ok, res = True, ""
    for xi, img in zip(bas, images):
        if img.op.principal_symbol() != symbol_invariant(xi):
            ok, res = False, f"element {xi.tag}"
            break
    out.append(_check("cone-symbol-match",
                      "principal symbols of the corrected realization match the "
                      "invariant-function table per block type", ok, res))
    return out


# ------------------------------------------------------------------ shapovalov


def shapovalov_checks(k: int) -> list:
    out = []
    dmax = min(3, max_degree_cap())

    ok, res = True, ""
    for d in range(1, dmax + 1):
        expanded = shapovalov_expand(d, k)
        closed = ConeOp(shapovalov_closed(d, k).to_weyl(k))
        if expanded != closed:
            ok, res = False, f"d={d}"
            break
    out.append(_check("shapovalov-expand-vs-closed",
                      "the multinomial expansion equals the factored Euler polynomial "
                      "as canonical classes, d = 1..3", ok, res))

    ok, res = True, ""
    for d in range(1, dmax + 1):
        expanded = shapovalov_expand(d, k)
        closed = shapovalov_closed(d, k)
        for r in range(2 * d + 2):
            if scalar_on_graded(expanded, r) != closed.eval(r):
                ok, res = False, f"d={d} r={r}"
                break
        if not ok:
            break
    out.append(_check("shapovalov-graded-scalars",
                      "the expansion acts on each graded piece by the closed-form scalar, "
                      "enough points to pin the polynomial", ok, res))

    ok, res = True, ""
    for d in range(1, dmax + 1):
        try:
            fourier_roots_bezout(d, k)
        except (ArithmeticError, AssertionError) as exc:
            ok, res = False, f"d={d}: {exc}"
            break
    out.append(_check("shapovalov-bezout",
                      "the element and its Fourier image generate the unit ideal "
                      "in the Euler polynomial ring", ok, res))

    ok, res = True, ""
    levi_ops = [euler_op(k), d_op(k, 1, 2), b_op(k, 1, 2), c_op(k, 1, 2)]
    for d in range(1, min(2, dmax) + 1):
        bop = shapovalov_expand(d, k)
        for op in levi_ops:
            c = bop.commutator(ConeOp(op))
            if not c.is_zero_class():
                ok, res = False, f"d={d}: {_clip(c.canonical_text())}"
                break
        if not ok:
            break
    out.append(_check("shapovalov-weight-zero",
                      "the element commutes with the Euler operator and the Levi generators",
                      ok, res))
    return out


# ---------------------------------------------------------------- moment-orbit


def moment_orbit_checks(k: int) -> list:
    bas = basis(k)
    out = []

    ok, res = True, ""
    for xi in bas:
        defect = check_descent(xi)
        if not defect.is_zero():
            ok, res = False, f"element {xi.tag}: {_clip(defect.text())}"
            break
    out.append(_check("moment-descent",
                      "the moment pairing is invariant under fiber shears modulo the "
                      "cone equation, full basis", ok, res))

    rel = verify_orbit_relations(k)
    bad = [name for name, okr, _ in rel if not okr]
    residues = "; ".join(f"{name}: {txt}" for name, okr, txt in rel if not okr)
    out.append(_check("moment-orbit-relations",
                      f"all {len(rel)} quadratic, rank and square relations of the "
                      "invariant matrix vanish on the cone", not bad, residues))

    ok, res = True, ""
    for xi in bas:
        if rho_tilde(xi).op.principal_symbol() != symbol_invariant(xi):
            ok, res = False, f"element {xi.tag}"
            break
    out.append(_check("moment-symbol-bridge",
                      "operator principal symbols equal the descended invariant "
                      "functions per block type", ok, res))

    ok, res = True, ""
    symbols = [(xi, rho_tilde(xi)) for xi in bas]
    rng = random.Random(600 + k)
    pairs = 0
    while pairs < 12:
        (xi, a), (eta, b) = rng.sample(symbols, 2)
        comm = a.op.commutator(b.op)
        if comm.is_zero() or comm.order() != a.op.order() + b.op.order() - 1:
            continue
        pairs += 1
        if poisson(a.op.principal_symbol(), b.op.principal_symbol(), k) \
                != comm.principal_symbol():
            ok, res = False, f"pair {xi.tag} {eta.tag}"
            break
    out.append(_check("moment-poisson-compatibility",
                      "the Poisson bracket of symbols is the symbol of the commutator "
                      "when the top order survives", ok, res))

    # on T*V the dual form lives on the momentum block and the form on the base
    qstar = q_poly(k, x_vector(k))
    qbase = q_poly(k, v_vector(k))
    bracket = poisson(qstar, qbase, k)
    out.append(_check("moment-euler-pairing",
                      "the Poisson bracket of the dual form against the form is the "
                      "phase-space Euler function", bracket == phase_euler(k),
                      bracket.text()))
    return out


# ------------------------------------------------------------- harmonic-kelvin


def harmonic_kelvin_checks(k: int) -> list:
    n = 2 * k
    lap = laplacian_op(k)
    out = []

    ok, res = True, ""
    for xi in basis(k):
        cert = is_higher_symmetry(phi(xi))
        if cert is None:
            ok, res = False, f"no certificate for {xi.tag}"
            break
        scalar = (WeylOp.mult(b_form_poly(k, xi.lam))
                  - WeylOp.const(n, xi.alpha)).scale(2)
        if cert.delta != phi(xi) - scalar:
            ok, res = False, f"certificate shape wrong for {xi.tag}"
            break
    out.append(_check("harmonic-symmetry-certificates",
                      "every conformal vector field normalizes the Laplacian ideal "
                      "with the expected first-order shift", ok, res))

    no_x1 = is_higher_symmetry(WeylOp.mult(Poly.var(n, 0))) is None
    try:
        WeylOp.partial(n, n - 1).divide_right_by_constcoef(lap)
        no_dyk = False
    except NotDivisible:
        no_dyk = True
    out.append(_check("harmonic-symmetry-rejections",
                      "multiplication by a coordinate is not a symmetry; a bare "
                      "derivative is not a right multiple of the Laplacian",
                      no_x1 and no_dyk,
                      f"x1 rejected: {no_x1}, dy_k rejected: {no_dyk}"))

    deg = min(6, max_degree_cap())
    ok, res = True, ""
    tests = [QLaurent(k, Poly.monomial(m), 0)
             for m in monomials_up_to(n, deg)]
    tests.append(QLaurent.one_over_q(k))
    for f in tests:
        if kelvin(kelvin(f)) != f:
            ok, res = False, f"involution fails on {f.text()}"
            break
        defect = kelvin_intertwine_defect(f)
        if not defect.is_zero():
            ok, res = False, f"intertwine defect on {f.text()}: {_clip(defect.text())}"
            break
    out.append(_check("kelvin-involution-intertwine",
                      f"the Kelvin transform is an involution and intertwines the "
                      f"Laplacian on all monomials of degree <= {deg} and on 1/Q",
                      ok, res))

    kone = kelvin(QLaurent(k, Poly.const(n, 1), 0))
    ok = LocalWeylOp.from_weyl(lap).apply(kone).is_zero()
    out.append(_check("kelvin-fundamental-solution",
                      "the Kelvin image of 1 is annihilated by the Laplacian",
                      ok, kone.text()))

    ok, res = True, ""
    for d in range(min(5, max_degree_cap()) + 1):
        harm, qmult = harmonic_decompose(d, k)
        want = harmonic_dimension(d, k)
        if len(harm) != want:
            ok, res = False, f"d={d}: got {len(harm)}, expected {want}"
            break
    out.append(_check("harmonic-dimensions",
                      "harmonic nullspace dimensions match the binomial difference, d <= 5",
                      ok, res))

    ok, res = True, ""
    if k == 2:
        for d in range(4):
            harm, _ = harmonic_decompose(d, k)
            for h in harm:
                img = LocalWeylOp.from_weyl(lap).apply(kelvin(QLaurent(k, h, 0)))
                if not img.is_zero():
                    ok, res = False, f"d={d}: {_clip(img.text())}"
                    break
            if not ok:
                break
    out.append(_check("kelvin-preserves-harmonicity",
                      "Kelvin images of harmonic polynomials stay harmonic (k=2, d <= 3)",
                      ok, res))

    val = lap.apply(q_form(k).scale(-1))
    ok = val == Poly.const(n, -k) and k != 0
    out.append(_check("harmonic-nonexample",
                      "the Laplacian of the negated form is the nonzero constant -k",
                      ok, val.text()))

    out.append(_check("harmonic-dirac-relations",
                      "the second-order images annihilate constants and coordinates "
                      "span the degree-one piece", dirac_relations(k)))

    bes = bessel_check(k, 12)
    ok = bes["residue_ok"] and bes["laplacian_zero"] and bes["euler_matches"]
    out.append(_check("harmonic-bessel-series",
                      "the truncated radial series solves the system to order 12",
                      ok, bes["residue_low_degree"].text()))

    defect = exp_harmonicity_defect(k)
    out.append(_check("harmonic-exponential",
                      "the exponential of the cone pairing is harmonic modulo the "
                      "cone equation", defect.is_zero(), defect.text()))

    bnd = boundary_phase_check(k)
    out.append(_check("harmonic-boundary-phase",
                      "the boundary phase expansion identities hold modulo the cone equation",
                      bnd["ok"], ""))

    n2 = n2_counterexample()
    ok = (n2["commutator_ok"] and not n2["xi_of_x_polynomial"]
          and n2["delta_of_x_zero"])
    out.append(_check("harmonic-n2-counterexample",
                      "in the excluded rank-one case the inverse-coordinate field "
                      "satisfies the commutator law but leaves the polynomial class",
                      ok, str(n2["commutator_worst"])))
    return out


# ------------------------------------------------------------------------- cli


def cli_checks(k: int) -> list:
    rng = random.Random(700 + k)
    out = []

    atoms = ["E", "Delta", "Q"]
    for i in range(1, k + 1):
        atoms += [f"x{i}", f"y{i}", f"dx{i}", f"dy{i}", f"XX{i}", f"YY{i}"]
    for i in range(1, k + 1):
        for j in range(1, k + 1):
            atoms.append(f"Dop{i}{j}")
            if i < j:
                atoms += [f"Bop{i}{j}", f"Cop{i}{j}"]
    atoms += [str(rng.randint(0, 20)) for _ in range(4)]

    def rand_tree(depth: int):
        if depth == 0 or rng.random() < 0.3:
            return exprparse.parse(rng.choice(atoms), k)
        kind = rng.choice(["add", "sub", "mul", "pow", "neg"])
        if kind == "pow":
            return ("pow", rand_tree(0), rng.randint(0, 4))
        if kind == "neg":
            return ("neg", rand_tree(depth - 1))
        return (kind, rand_tree(depth - 1), rand_tree(depth - 1))

    ok, res = True, ""
    for idx in range(1000):
        tree = rand_tree(4)
        text = exprparse.to_text(tree)
        if exprparse.parse(text, k) != tree:
            ok, res = False, f"expression #{idx}: {text}"
            break
    out.append(_check("cli-parser-roundtrip",
                      "printing and reparsing 1000 random expressions is the identity",
                      ok, res))

    lhs = exprparse.eval_weyl(exprparse.parse("Delta*Q - Q*Delta", k), k)
    rhs = euler_op(k) + WeylOp.const(2 * k, k)
    ok1 = lhs == rhs
    comm = ConeOp(exprparse.eval_weyl(
        exprparse.parse("XX1*YY2 - YY2*XX1", k), k))
    ok2 = comm.is_zero_class()
    out.append(_check("cli-eval-examples",
                      "the bracket of Laplacian and form evaluates to the shifted Euler "
                      "operator; the second-order images commute",
                      ok1 and ok2, f"[Delta,Q]={lhs.text()}"))

    sample = SuiteReport("sample", k, [
        CheckResult("a", "first", True, ""),
        CheckResult("b", "second", False, "residue text"),
    ])
    parsed = SuiteReport.from_json_obj(json.loads(emit(sample, "json")))
    out.append(_check("cli-emit-roundtrip",
                      "JSON report emission parses back to an equal report",
                      parsed == sample))
    return out


SUITES = {
    "algebra-core": algebra_core_checks,
    "weyl": weyl_checks,
    "lie-orthogonal": lie_orthogonal_checks,
    "lie-hom": lie_hom_checks,
    "cone-ops": cone_ops_checks,
    "shapovalov": shapovalov_checks,
    "moment-orbit": moment_orbit_checks,
    "harmonic-kelvin": harmonic_kelvin_checks,
    "cli": cli_checks,
}

SUITE_ORDER = ["algebra-core", "weyl", "lie-orthogonal", "cone-ops",
               "shapovalov", "moment-orbit", "harmonic-kelvin", "cli"]


def run_suite(name: str, k: int = 2) -> SuiteReport:
    """Run a named suite (or 'all') and return its deterministic report."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if name == "all":
        checks = []
        for sub in SUITE_ORDER:
            checks.extend(SUITES[sub](k))
        return SuiteReport("all", k, checks)
    if name not in SUITES:
        raise UnknownSuite(f"unknown suite {name!r}; known: "
                           + ", ".join(sorted(SUITES) + ["all"]))
    return SuiteReport(name, k, SUITES[name](k))
