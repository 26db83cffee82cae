"""Kelvin transform, harmonic decomposition, and worked examples."""

from fractions import Fraction

import pytest

from quadricops.coneops import phi, b_form_poly
from quadricops.harmonic import (bessel_check, bessel_series,
                                 boundary_phase_check, dirac_relations,
                                 exp_harmonicity_defect, harmonic_decompose,
                                 harmonic_dimension, is_higher_symmetry,
                                 kelvin, kelvin_intertwine_defect,
                                 n2_counterexample)
from quadricops.lie import LieElt, basis
from quadricops.poly import Poly, QLaurent, q_form
from quadricops.weyl import LocalWeylOp, WeylOp, laplacian_op

K = 2
N = 2 * K


def test_kelvin_of_one():
    one = QLaurent(K, Poly.const(N, 1), 0)
    kone = kelvin(one)
    # (-Q)^{-(k-1)} = -1/Q for k = 2
    assert kone == QLaurent(K, Poly.const(N, -1), 1)
    assert kelvin(kone) == one
    assert LocalWeylOp.from_weyl(laplacian_op(K)).apply(kone).is_zero()


def test_kelvin_involution_on_samples():
    samples = [QLaurent(K, Poly.var(N, 0), 0),
               QLaurent(K, Poly.monomial((2, 1, 0, 0)), 0),
               QLaurent.one_over_q(K),
               QLaurent(K, Poly.var(N, 2), 1)]
    for f in samples:
        assert kelvin(kelvin(f)) == f


def test_kelvin_intertwine_on_samples():
    samples = [QLaurent(K, Poly.monomial(m), 0)
               for m in [(0, 0, 0, 0), (1, 0, 0, 0), (1, 1, 0, 0),
                         (2, 0, 1, 1), (0, 3, 0, 1)]]
    samples.append(QLaurent.one_over_q(K))
    for f in samples:
        assert kelvin_intertwine_defect(f).is_zero()


def test_higher_symmetry_certificates():
    for xi in basis(K):
        cert = is_higher_symmetry(phi(xi))
        assert cert is not None, xi.tag
        shift = (WeylOp.mult(b_form_poly(K, xi.lam))
                 - WeylOp.const(N, xi.alpha)).scale(2)
        assert cert.delta == phi(xi) - shift, xi.tag


def test_higher_symmetry_rejections():
    assert is_higher_symmetry(WeylOp.mult(Poly.var(N, 0))) is None


def test_harmonic_dimensions():
    # k = 2: constants 1, linear 4, quadratic 10 - 1 = 9
    assert harmonic_dimension(0, 2) == 1
    assert harmonic_dimension(1, 2) == 4
    assert harmonic_dimension(2, 2) == 9
    for d in range(5):
        harm, qmult = harmonic_decompose(d, K)
        assert len(harm) == harmonic_dimension(d, K)
        lap = laplacian_op(K)
        for h in harm:
            assert lap.apply(h).is_zero()


def test_kelvin_preserves_harmonicity():
    lap = LocalWeylOp.from_weyl(laplacian_op(K))
    for d in range(3):
        harm, _ = harmonic_decompose(d, K)
        for h in harm:
            assert lap.apply(kelvin(QLaurent(K, h, 0))).is_zero()


def test_bessel_series_factorial_squares():
    # for k = 2 the recursion gives a_m = 1/(m!)^2
    coeffs = bessel_series(2, 6)
    import math
    for m, c in enumerate(coeffs):
        assert c == Fraction(1, math.factorial(m) ** 2)


def test_bessel_check():
    rep = bessel_check(K, 10)
    assert rep["residue_ok"] and rep["laplacian_zero"] and rep["euler_matches"]


def test_exp_harmonicity():
    assert exp_harmonicity_defect(K).is_zero()
    assert exp_harmonicity_defect(3).is_zero()


def test_boundary_phase():
    assert boundary_phase_check(K)["ok"]


def test_nonexample_laplacian_of_form():
    val = laplacian_op(K).apply(q_form(K).scale(-1))
    assert val == Poly.const(N, -K)
    assert not val.is_zero()


def test_n2_counterexample():
    rep = n2_counterexample()
    assert rep["commutator_ok"]
    assert not rep["xi_of_x_polynomial"]
    assert rep["delta_of_x_zero"]


def test_dirac_relations():
    assert dirac_relations(K)
    assert dirac_relations(3)
