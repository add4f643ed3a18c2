"""
교차환 / 천 류 테스트
"""
from fractions import Fraction
from itertools import permutations

import pytest
import sympy as sp

from src.chern import (AmbientRing, H2Class, H4Class, N_SYMBOL, Polarization, degree,
                       degree_polynomial, h2_product, h2_square, indivisibility, integrate_triple,
                       integrate_x, primitive_integrals, slope, twist_chern)

E_C1 = H2Class(-2, 2)
E_C2 = H4Class(0, Fraction(1, 3))


def test_oracle_primitive_integrals():
    assert primitive_integrals() == {(3, 0): 0, (2, 1): 3, (1, 2): 3, (0, 3): 0}
    assert AmbientRing().check_relation()


@pytest.mark.parametrize("c, expected", [
    (H2Class(1, -1), H4Class(-1, -1)),
    (H2Class(1, 0), H4Class(1, 0)),
    (H2Class(2, 1), H4Class(8, 5)),
])
def test_h2_square(c, expected):
    assert h2_square(c) == expected


def test_integrate_examples():
    assert integrate_x(H4Class(1, 0), H2Class(0, 1)) == 3
    assert integrate_x(H4Class(1, 0), H2Class(1, 0)) == 0
    assert degree(E_C1, Polarization(2)) == 18


def test_integration_is_symmetric(rng):
    for _ in range(50):
        classes = [H2Class(*(int(v) for v in rng.integers(-5, 6, size=2))) for _ in range(3)]
        values = {integrate_triple(*order) for order in permutations(classes)}
        assert len(values) == 1


def test_degree_polynomials():
    assert sp.expand(degree_polynomial(E_C1) - (6 * N_SYMBOL ** 2 - 6)) == 0
    twisted = E_C1 + 2 * H2Class(2, -1)
    assert twisted == H2Class(2, 0)
    assert sp.expand(degree_polynomial(twisted) - 6 * (2 * N_SYMBOL + 1)) == 0
    assert degree(twisted, Polarization(2)) == 30
    assert degree(H2Class(0, 0), Polarization(3)) == 0


def test_degree_is_linear_with_leading_coefficient(rng):
    for _ in range(50):
        a, b = (int(v) for v in rng.integers(-6, 7, size=2))
        poly = sp.Poly(degree_polynomial(H2Class(a, b)), N_SYMBOL)
        assert poly.degree() <= 2
        assert poly.coeff_monomial(N_SYMBOL ** 2) == 3 * b


def test_slope_divides_by_rank():
    pol = Polarization(Fraction(5, 2))
    assert slope(E_C1, 2, pol) == degree(E_C1, pol) / 2
    with pytest.raises(ValueError):
        slope(E_C1, 0, pol)


def test_twist_to_A():
    c1, c2 = twist_chern(E_C1, E_C2, 1, -1)
    assert c1 == H2Class(0, 0)
    assert c2 == H4Class(1, Fraction(4, 3))
    verdict = indivisibility(c2)
    assert verdict.kind == "indivisible"
    assert verdict.integral_coords == (3, 4)


def test_twist_identity_and_inverse():
    assert twist_chern(E_C1, E_C2, 0, 0) == (E_C1, E_C2)
    c1, c2 = twist_chern(E_C1, E_C2, 1, 0)
    assert twist_chern(c1, c2, -1, 0) == (E_C1, E_C2)


def test_twist_composes_additively(rng):
    for _ in range(50):
        k, l, k2, l2 = (int(v) for v in rng.integers(-4, 5, size=4))
        c1 = H2Class(*(int(v) for v in rng.integers(-3, 4, size=2)))
        c2 = H4Class(*(Fraction(int(v), 3) for v in rng.integers(-6, 7, size=2)))
        stepwise = twist_chern(*twist_chern(c1, c2, k, l), k2, l2)
        assert stepwise == twist_chern(c1, c2, k + k2, l + l2)


@pytest.mark.parametrize("c, expected", [
    (H4Class(1, Fraction(4, 3)), "indivisible"),
    (H4Class(2, 0), "divisible by 6"),
    (H4Class(Fraction(1, 2), 0), "non-integral"),
    (H4Class(0, 0), "zero class"),
])
def test_indivisibility(c, expected):
    assert str(indivisibility(c)) == expected


def test_h2_product_is_bilinear_companion():
    c = H2Class(1, 2)
    d = H2Class(-1, 3)
    assert h2_product(c, d) == h2_product(d, c)
    assert h2_product(c, c) == h2_square(c)


def test_zero_class_has_no_divisor():
    verdict = indivisibility(H4Class(0, 0))
    assert verdict.kind == "zero"
    assert verdict.divisor == 0
    assert "divisible" not in str(verdict)
