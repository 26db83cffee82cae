"""Weyl algebra: normal orders, divisions, symbols, extensional tests."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from quadricops.poly import Poly, QLaurent, q_form
from quadricops.weyl import (LocalWeylOp, NotDivisible, WeylOp, euler_op,
                             is_zero_extensional, laplacian_op,
                             monomials_up_to)

K = 2
N = 2 * K


def weyl_ops(nvars=N, deg=2):
    expvec = st.tuples(*[st.integers(0, 1) for _ in range(nvars)]).filter(
        lambda m: sum(m) <= deg)
    return st.dictionaries(
        st.tuples(expvec, expvec),
        st.fractions(min_value=-6, max_value=6, max_denominator=3),
        max_size=4,
    ).map(lambda d: WeylOp(nvars, d))


def small_polys():
    mono = st.tuples(*[st.integers(0, 2) for _ in range(N)]).filter(
        lambda m: sum(m) <= 4)
    return st.dictionaries(
        mono, st.fractions(min_value=-6, max_value=6, max_denominator=3),
        max_size=4).map(lambda d: Poly(N, d))


def test_canonical_commutator():
    # [Delta, Q] = E + k as operators
    lap, q, e = laplacian_op(K), WeylOp.mult(q_form(K)), euler_op(K)
    assert lap * q - q * lap == e + WeylOp.const(N, K)


def test_laplacian_of_form():
    assert laplacian_op(K).apply(q_form(K)) == Poly.const(N, K)


def test_principal_symbol_of_laplacian():
    # symbol variables: base block then fiber block; sigma(Delta) = Q(fiber)
    sym = laplacian_op(K).principal_symbol()
    fiber = q_form(K).embed(4 * K, N)
    assert sym == fiber


def test_divide_right_by_mult():
    q = q_form(K)
    a = euler_op(K) * WeylOp.mult(q)
    quo = a.divide_right_by_mult(q)
    assert quo * WeylOp.mult(q) == a
    with pytest.raises(NotDivisible):
        euler_op(K).divide_right_by_mult(q)


def test_divide_right_by_constcoef():
    lap = laplacian_op(K)
    a = (euler_op(K) + WeylOp.const(N, 3)) * lap
    quo = a.divide_right_by_constcoef(lap)
    assert quo * lap == a
    # a bare first-order derivative is not a right multiple of the Laplacian
    with pytest.raises(NotDivisible):
        WeylOp.partial(N, N - 1).divide_right_by_constcoef(lap)


def test_local_operator_on_laurent():
    lap = LocalWeylOp.from_weyl(laplacian_op(K))
    # Delta(Q^{-1}) for 2k = 4 variables: Q is harmonic away from the cone
    # only after the Kelvin weight; the raw value is 2(k-2)/Q^2... for k=2: 0
    val = lap.apply(QLaurent.one_over_q(K))
    assert val == QLaurent(K, Poly.const(N, 2 * (2 - K)), 2)


@settings(max_examples=20, deadline=None)
@given(weyl_ops(), weyl_ops(), weyl_ops())
def test_weyl_associativity(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=20, deadline=None)
@given(weyl_ops(), weyl_ops(), small_polys())
def test_weyl_module_action(a, b, f):
    assert (a * b).apply(f) == a.apply(b.apply(f))


@settings(max_examples=20, deadline=None)
@given(weyl_ops())
def test_normal_order_roundtrip(a):
    assert WeylOp.from_dleft(N, a.dleft()) == a


@settings(max_examples=20, deadline=None)
@given(weyl_ops())
def test_division_multiply_back(a):
    q = q_form(K)
    w = a * WeylOp.mult(q)
    assert w.divide_right_by_mult(q) * WeylOp.mult(q) == w
    lap = laplacian_op(K)
    w2 = a * lap
    assert w2.divide_right_by_constcoef(lap) * lap == w2


@settings(max_examples=30, deadline=None)
@given(weyl_ops(), weyl_ops())
def test_symbol_multiplicative(a, b):
    ab = a * b
    if not a.is_zero() and not b.is_zero() \
            and ab.order() == a.order() + b.order():
        assert ab.principal_symbol() == a.principal_symbol() * b.principal_symbol()


def test_extensional_determinacy():
    lap = laplacian_op(K)
    assert is_zero_extensional(lap - lap)
    assert not is_zero_extensional(lap)
    # an operator agreeing with E on all low-degree monomials equals E
    e = euler_op(K)
    mimic = WeylOp(N, dict(e.terms))
    assert is_zero_extensional(mimic - e)


def test_monomials_up_to():
    ms = list(monomials_up_to(2, 2))
    assert sorted(ms) == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (2, 0)]
