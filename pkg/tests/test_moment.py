"""Moment map, descent, orbit relations, and the Poisson bracket."""

from fractions import Fraction

from hypothesis import given, settings, strategies as st

from quadricops.coneops import rho_tilde
from quadricops.lie import basis
from quadricops.momentorbit import (check_descent, moment, orbit_matrix_at,
                                    phase_euler, poisson, q_poly,
                                    symbol_invariant, v_vector,
                                    verify_orbit_relations, x_vector)
from quadricops.poly import Poly

K = 2
NV = 4 * K


def phase_polys():
    mono = st.tuples(*[st.integers(0, 2) for _ in range(NV)]).filter(
        lambda m: sum(m) <= 3)
    return st.dictionaries(
        mono, st.fractions(min_value=-5, max_value=5, max_denominator=3),
        max_size=4).map(lambda d: Poly(NV, d))


def test_descent_zero_full_basis():
    for xi in basis(K):
        assert check_descent(xi).is_zero(), xi.tag


def test_moment_degrees():
    # the moment pairing is linear in the fiber and at most cubic in the base
    for xi in basis(K):
        p = moment(xi)
        for m in p.terms:
            assert sum(m[2 * K:]) == 1  # fiber block degree exactly 1


def test_orbit_relations_pass():
    for name, ok, residue in verify_orbit_relations(K):
        assert ok, f"{name}: {residue}"


def test_orbit_matrix_squares_to_zero_numerically():
    # at a point with Q(w) = 0 the invariant matrix squares to zero
    v = [1, 2, -1, 3]
    w = [1, 0, 0, 0]  # isotropic
    M = orbit_matrix_at(K, v, w)
    n = len(M)
    sq = [[sum(M[i][l] * M[l][j] for l in range(n)) for j in range(n)]
          for i in range(n)]
    assert all(c == 0 for row in sq for c in row)


def test_symbol_bridge_full_basis():
    for xi in basis(K):
        assert rho_tilde(xi).op.principal_symbol() == symbol_invariant(xi), xi.tag


def test_euler_pairing():
    qstar = q_poly(K, x_vector(K))   # dual form on the momentum block
    qbase = q_poly(K, v_vector(K))
    assert poisson(qstar, qbase, K) == phase_euler(K)


@settings(max_examples=15, deadline=None)
@given(phase_polys(), phase_polys())
def test_poisson_antisymmetry(a, b):
    assert poisson(a, b, K) == -poisson(b, a, K)


@settings(max_examples=10, deadline=None)
@given(phase_polys(), phase_polys(), phase_polys())
def test_poisson_leibniz(a, b, c):
    assert poisson(a, b * c, K) == poisson(a, b, K) * c + b * poisson(a, c, K)


@settings(max_examples=8, deadline=None)
@given(phase_polys(), phase_polys(), phase_polys())
def test_poisson_jacobi(a, b, c):
    total = (poisson(a, poisson(b, c, K), K)
             + poisson(b, poisson(c, a, K), K)
             + poisson(c, poisson(a, b, K), K))
    assert total.is_zero()
