"""The invariant pairing element as an Euler polynomial."""

from fractions import Fraction

import pytest

from quadricops.coneops import ConeOp, d_op
from quadricops.shapovalov import (EulerPoly, NotScalar, fourier_euler_image,
                                   fourier_roots_bezout, scalar_on_graded,
                                   shapovalov_closed, shapovalov_expand, xgcd)
from quadricops.weyl import WeylOp, euler_op

K = 2


def test_closed_form_roots():
    # d = 2, k = 2: both factors contribute roots 0 and 1, so E^2 (E-1)^2
    p = shapovalov_closed(2, K)
    for r in (0, 1):
        assert p.eval(r) == 0
    assert p.eval(-1) != 0 and p.eval(2) != 0
    assert p.degree() == 4


def test_closed_form_d1():
    # d = 1: E (E + k - 2); for k = 2 this is E^2
    assert shapovalov_closed(1, 2) == EulerPoly([0, 0, 1])
    assert shapovalov_closed(1, 3) == EulerPoly([0, 1, 1])


def test_fourier_image_substitution():
    p = EulerPoly([0, 1])  # E
    img = fourier_euler_image(p, K)
    assert img == EulerPoly([-2 * K + 2, -1])
    # involution
    assert fourier_euler_image(img, K) == p


def test_expand_equals_closed_small():
    for d in (1, 2):
        expanded = shapovalov_expand(d, K)
        closed = ConeOp(shapovalov_closed(d, K).to_weyl(K))
        assert expanded == closed


def test_scalar_on_graded_matches():
    d = 2
    expanded = shapovalov_expand(d, K)
    closed = shapovalov_closed(d, K)
    for r in range(2 * d + 2):
        assert scalar_on_graded(expanded, r) == closed.eval(r)


def test_scalar_rejects_non_scalar_operator():
    # multiplication by a coordinate does not act by a scalar on degree 1
    with pytest.raises(NotScalar):
        from quadricops.poly import Poly
        scalar_on_graded(ConeOp(WeylOp.mult(Poly.var(2 * K, 0))
                                * WeylOp.partial(2 * K, 1)), 1)


def test_bezout_certificate():
    for d in (1, 2, 3):
        a, b = fourier_roots_bezout(d, K)
        p = shapovalov_closed(d, K)
        q = fourier_euler_image(p, K)
        assert a * p + b * q == EulerPoly([1])


def test_xgcd_generic():
    a = EulerPoly([1, 2, 1])   # (E+1)^2
    b = EulerPoly([2, 1])      # E + 2
    g, s, t = xgcd(a, b)
    assert g == EulerPoly([1])
    assert s * a + t * b == g


def test_weight_zero():
    bop = shapovalov_expand(1, K)
    assert bop.commutator(ConeOp(euler_op(K))).is_zero_class()
    assert bop.commutator(ConeOp(d_op(K, 1, 2))).is_zero_class()


def test_euler_poly_to_weyl():
    p = EulerPoly([1, 1])  # E + 1
    op = p.to_weyl(K)
    assert op == euler_op(K) + WeylOp.const(2 * K, 1)
