"""
다항식 핵심 모듈 테스트
"""
from fractions import Fraction

import pytest

from src.poly import (BiForm, BidegreeError, BinForm, CommonFactorError, DualBinForm,
                      PolynomialFormatError, arith, binform_gcd, canonical_F, common_zeros_p2,
                      format_biform, monomials, parse_biform, restrict_to_C,
                      restrict_to_eps_curve, variable)

BIDEGREES = [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)]


def test_monomial_counts():
    assert len(monomials(3, 2)) == 60
    assert len(monomials(0, 3)) == 10
    assert monomials(1, 0)[0] == (1, 0, 0, 0, 0, 0)


def test_canonical_form_restricts_to_zero_on_curve():
    F = canonical_F()
    assert F.bidegree == (3, 3)
    assert restrict_to_C(F).is_zero()
    assert restrict_to_C(F.partial("x")).is_zero()
    assert restrict_to_C(F.partial("u")) == BinForm([0, 0, 0, 1])
    assert restrict_to_C(F.partial("v")) == BinForm([1, 0, 1, 0])


def test_add_requires_matching_bidegree():
    x, u = variable("x"), variable("u")
    with pytest.raises(BidegreeError):
        x + u
    # 영다항식은 어느 차수와도 더할 수 있다
    assert (x + BiForm.zero((0, 1))) == x


def test_arith_dispatch():
    x, y = variable("x"), variable("y")
    assert arith(x, y, "add") == x + y
    assert arith(x, y, "mul").bidegree == (2, 0)
    assert arith(x, Fraction(1, 2), "scalar").coefficient((1, 0, 0, 0, 0, 0)) == Fraction(1, 2)
    with pytest.raises(ValueError):
        arith(x, y, "pow")


def test_leibniz_rule(rng, random_biform):
    for case in range(60):
        d_f = BIDEGREES[case % len(BIDEGREES)]
        d_g = BIDEGREES[(case * 3 + 1) % len(BIDEGREES)]
        f = random_biform(rng, d_f)
        g = random_biform(rng, d_g)
        for var in ("x", "y", "z", "u", "v", "w"):
            assert (f * g).partial(var) == f.partial(var) * g + f * g.partial(var)


def test_restriction_is_ring_homomorphism(rng, random_biform):
    for case in range(60):
        bidegree = BIDEGREES[case % len(BIDEGREES)]
        f = random_biform(rng, bidegree, n_terms=6)
        g = random_biform(rng, bidegree, n_terms=6)
        h = random_biform(rng, BIDEGREES[(case + 2) % len(BIDEGREES)], n_terms=6)
        assert restrict_to_C(f + g) == restrict_to_C(f) + restrict_to_C(g)
        assert restrict_to_C(f * h) == restrict_to_C(f) * restrict_to_C(h)


def test_text_format_roundtrip_and_comments():
    text = "# 주석\n1/20 x^2 y w^3\n- y z^2 v w^2   # 끝 주석\n3 z^3 u w^2\n"
    form = parse_biform(text, (3, 3))
    assert form.coefficient((2, 1, 0, 0, 0, 3)) == Fraction(1, 20)
    assert form.coefficient((0, 1, 2, 0, 1, 2)) == -1
    assert parse_biform(format_biform(form)) == form


@pytest.mark.parametrize("text", ["2 x q", "x^a y", "1/0 x"])
def test_parse_errors(text):
    with pytest.raises(PolynomialFormatError):
        parse_biform(text)


def test_parse_rejects_wrong_bidegree():
    with pytest.raises(PolynomialFormatError):
        parse_biform("x u\nx^2", None)
    with pytest.raises(PolynomialFormatError):
        parse_biform("x^3 u^3", (3, 2))


def test_binform_gcd():
    z2 = BinForm([0, 0, 1])
    zy = BinForm([0, 1, 0])
    assert binform_gcd([z2, zy]) == BinForm([0, 1])
    ab = BinForm([0, 4, 0], variables=("α", "β"))
    diff = BinForm([2, 0, -2], variables=("α", "β"))
    assert binform_gcd([ab, diff]).degree == 0
    with pytest.raises(ValueError, match="all-zero input"):
        binform_gcd([BinForm.zero(2)])


def test_dual_numbers_truncate_eps_squared():
    y = BinForm([1, 0])
    e = DualBinForm.eps(y)
    product = e * e
    assert product.f0.is_zero() and product.f1.is_zero()


def test_eps_curve_restriction_of_partials():
    F = canonical_F()
    s = BinForm([1, 0])
    e1 = restrict_to_eps_curve(F.partial("x"), s)
    e3 = restrict_to_eps_curve(F.partial("v"), s)
    assert e1.f0.is_zero() and e1.f1 == BinForm([2, 0, 0])
    assert e3.f0 == BinForm([1, 0, 1, 0])
    assert e3.f1 == BinForm([3, 0, 0, 0])


def test_common_zeros_unperturbed():
    F = canonical_F()
    g_u = F.partial("u").substitute_fibre()
    g_v = F.partial("v").substitute_fibre()
    zeros = common_zeros_p2(g_u, g_v)
    assert zeros.points == ((Fraction(1), Fraction(-1), Fraction(0)),)
    assert not zeros.irrational_roots


def test_common_zeros_shared_factor():
    z = variable("z")
    y = variable("y")
    with pytest.raises(CommonFactorError, match="positive-dimensional"):
        common_zeros_p2(z ** 3, z ** 2 * y)


def test_common_zeros_irrational_flag():
    x, y, z = variable("x"), variable("y"), variable("z")
    zeros = common_zeros_p2(x ** 2 - y ** 2 * 2, z)
    assert zeros.irrational_roots
    assert zeros.points == ()


def _random_binform(rng, degree, bound=4):
    return BinForm([int(v) for v in rng.integers(-bound, bound + 1, size=degree + 1)], degree)


def test_gcd_divides_inputs_with_coprime_quotients(rng):
    checked = 0
    while checked < 15:
        common = _random_binform(rng, 1, bound=3)
        f = common * _random_binform(rng, 2)
        g = common * _random_binform(rng, 2)
        if common.is_zero() or f.is_zero() or g.is_zero():
            continue
        d = binform_gcd([f, g])
        assert d.leading_coefficient() == 1
        d.exact_quotient(common.monic())
        quotients = [f.exact_quotient(d), g.exact_quotient(d)]
        assert binform_gcd(quotients).degree == 0
        checked += 1


def test_dual_product_law(rng):
    for _ in range(10):
        a, b = _random_binform(rng, 1), _random_binform(rng, 1)
        c, d = _random_binform(rng, 2), _random_binform(rng, 2)
        product = DualBinForm(a, b) * DualBinForm(c, d)
        # (a + εb)(c + εd) = ac + ε(ad + bc)
        assert product.f0 == a * c
        assert product.f1 == a * d + b * c
        assert DualBinForm(a, b) * DualBinForm(c, d) == DualBinForm(c, d) * DualBinForm(a, b)
    square = DualBinForm.eps(_random_binform(rng, 2)) * DualBinForm.eps(_random_binform(rng, 2))
    assert square.f0.is_zero() and square.f1.is_zero()
