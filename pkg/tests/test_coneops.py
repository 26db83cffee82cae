"""Cone operators: realizations, canonical classes, generator words."""

import random
from fractions import Fraction

import pytest

from quadricops.coneops import (ConeOp, GenWord, NotNormalizing,
                                a_correction, euler_weight_op, grading,
                                is_ideal_preserving, letter_op,
                                letter_lie_preimage, phi, rho_amb, rho_tilde,
                                tau, tau_hat, xx_op, yy_op, d_op, b_op, c_op)
from quadricops.lie import LieElt, basis
from quadricops.poly import Poly, q_form
from quadricops.weyl import WeylOp, euler_op, laplacian_op

K = 2
N = 2 * K


def elt_mu(i):
    e = [0] * N
    e[i] = 1
    return LieElt(K, mu=e)


def elt_lam(i):
    e = [0] * N
    e[i] = 1
    return LieElt(K, lam=e)


def test_tau_on_named_operators():
    assert tau(laplacian_op(K)) == WeylOp.mult(q_form(K))
    assert tau(euler_op(K)) == -(euler_op(K) + WeylOp.const(N, N))
    # involution up to sign: tau(tau(x_i)) = -x_i
    xi = WeylOp.mult(Poly.var(N, 0))
    assert tau(tau(xi)) == -xi


def test_phi_translation_is_derivative():
    # a pure translation acts as minus the directional derivative
    assert phi(elt_mu(0)) == -WeylOp.partial(N, 0)


def test_commutator_law_example():
    # [phi(xi), Delta] = 2(B(lam,v) - alpha) Delta
    lap = laplacian_op(K)
    xi = elt_lam(0)
    lhs = phi(xi) * lap - lap * phi(xi)
    from quadricops.coneops import b_form_poly
    rhs = (WeylOp.mult(b_form_poly(K, xi.lam))).scale(2) * lap
    assert lhs == rhs


def test_conjugation_identity_full_basis():
    qs = WeylOp.mult(q_form(K))
    for xi in basis(K):
        ra = rho_amb(xi)
        assert qs * ra == (ra - a_correction(xi)) * qs


def test_rho_tilde_on_distinguished_elements():
    # translations become coordinate multiplications
    assert rho_tilde(elt_mu(0)) == ConeOp(WeylOp.mult(Poly.var(N, 0)))
    # special conformal directions become the second-order operators
    assert rho_tilde(elt_lam(0)) == ConeOp(xx_op(K, 1))
    assert rho_tilde(elt_lam(K)) == ConeOp(yy_op(K, 1))
    # the grading element maps to minus the shifted Euler operator
    assert rho_tilde(LieElt(K, alpha=-1)) == ConeOp(euler_weight_op(K))


def test_rho_tilde_normalizes_ideal():
    for xi in basis(K):
        assert rho_tilde(xi).preserves_ideal()
    assert not is_ideal_preserving(WeylOp.partial(N, 0))


def test_tau_hat_values():
    # tau_hat of the vector-field realization recovers the cone realization
    xi = elt_lam(0)
    assert tau_hat(phi(xi)) == rho_tilde(xi)
    # the Laplacian maps to the zero class, the identity to itself
    assert tau_hat(laplacian_op(K)).is_zero_class()
    assert tau_hat(WeylOp.identity(N)) == ConeOp(WeylOp.identity(N))


def test_tau_hat_rejects_non_normalizer():
    # bare coordinate multiplication does not normalize the Laplacian ideal
    with pytest.raises(NotNormalizing):
        tau_hat(WeylOp.mult(Poly.var(N, 0)))


def test_lie_homomorphism_sampled():
    bas = basis(K)
    rng = random.Random(11)
    for _ in range(12):
        xi, eta = rng.sample(bas, 2)
        lhs = rho_tilde(xi.bracket(eta))
        rhs = rho_tilde(xi).commutator(rho_tilde(eta))
        assert lhs == rhs


def test_xxyy_commute_and_fundamental_relation():
    for i in range(1, K + 1):
        for j in range(1, K + 1):
            assert ConeOp(xx_op(K, i).commutator(yy_op(K, j))).is_zero_class()
    total = WeylOp.zero(N)
    for i in range(1, K + 1):
        total = total + xx_op(K, i) * yy_op(K, K + 1 - i)
    assert ConeOp(total).is_zero_class()


def test_canonical_class_detects_sidedness():
    # left multiples of the form are the zero class; right multiples are not
    qs = WeylOp.mult(q_form(K))
    lap = laplacian_op(K)
    assert ConeOp(qs * lap).is_zero_class()
    assert not ConeOp(lap * qs).is_zero_class()


def test_gradings():
    assert grading(ConeOp(WeylOp.mult(Poly.var(N, 0)))) == 1
    assert grading(ConeOp(xx_op(K, 1))) == -1
    assert grading(ConeOp(d_op(K, 1, 2))) == 0
    assert grading(ConeOp(euler_weight_op(K))) == 0
    mixed = ConeOp(WeylOp.mult(Poly.var(N, 0)) + xx_op(K, 2))
    assert grading(mixed) == "Mixed"


def test_fourier_word_involution_and_values():
    w = GenWord.letter(K, ("x", 1))
    fw = w.fourier()
    assert fw == GenWord.letter(K, ("XX", 1))
    assert fw.eval() == ConeOp(xx_op(K, 1))
    assert GenWord.letter(K, ("Etil",)).fourier() \
        == GenWord.letter(K, ("Etil",)).scale(-1)
    rng = random.Random(5)
    letters = [("x", 1), ("y", 2), ("XX", 2), ("YY", 1), ("Etil",),
               ("D", 1, 2), ("B", 1, 2), ("C", 1, 2)]
    for _ in range(100):
        terms = {tuple(rng.choice(letters) for _ in range(rng.randint(0, 4))):
                 Fraction(rng.randint(-4, 4) or 1) for _ in range(2)}
        word = GenWord(K, terms)
        assert word.fourier().fourier() == word


def test_letter_preimages_realize_letters():
    letters = [("x", 1), ("y", 2), ("XX", 1), ("YY", 2), ("Etil",),
               ("D", 1, 2), ("B", 1, 2), ("C", 1, 2)]
    for letter in letters:
        xi = letter_lie_preimage(K, letter)
        assert rho_tilde(xi) == ConeOp(letter_op(K, letter))
