"""
P² 위 두 삼원 형식의 공통 영점 (실베스터 종결식으로 x 소거 후 역대입)
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import sympy as sp

from src.poly.biform import BiForm, _as_fraction
from src.poly.binform import BinForm

X, Y, Z = sp.symbols("x y z")

Point = Tuple[Fraction, Fraction, Fraction]


def _rational(value: Fraction) -> sp.Rational:
    return sp.Rational(value.numerator, value.denominator)


class CommonFactorError(ValueError):
    """공통 인수가 있어 영점 집합이 무한한 경우"""

    def __init__(self, factor: str):
        self.factor = factor
        super().__init__(f"positive-dimensional common zeros: 공통 인수 {factor}")


@dataclass(frozen=True)
class CommonZeros:
    """공통 영점 계산 결과"""
    points: Tuple[Point, ...]
    resultant: BinForm
    irrational_roots: bool = False
    notes: Tuple[str, ...] = field(default_factory=tuple)


def normalize_point(point) -> Point:
    """첫 번째 0이 아닌 좌표가 1이 되도록 정규화"""
    values = [_as_fraction(c) for c in point]
    for c in values:
        if c != 0:
            return tuple(v / c for v in values)
    raise ValueError("사영 점은 (0,0,0)일 수 없습니다")


def _ternary_poly(form: BiForm) -> sp.Poly:
    if form.bidegree[1] != 0:
        raise ValueError(f"삼원 형식이 아닙니다 (이중차수 {form.bidegree})")
    expr = form.to_sympy().as_expr()
    return sp.Poly(expr, X, Y, Z, domain=sp.QQ)


def _rational_roots_binary(poly: sp.Poly) -> Tuple[List[Tuple[Fraction, Fraction]], bool]:
    """(y,z) 이원 형식의 유리 사영 근과 무리근 존재 여부"""
    roots = []
    irrational = False
    if poly.is_zero or poly.total_degree() <= 0:
        return roots, irrational
    _, factors = poly.factor_list()
    for factor, _mult in factors:
        if factor.total_degree() == 1:
            a = _as_fraction(factor.coeff_monomial(Y))
            b = _as_fraction(factor.coeff_monomial(Z))
            roots.append((b, -a))
        elif factor.total_degree() > 1:
            irrational = True
    return roots, irrational


def common_zeros_p2(f: BiForm, g: BiForm) -> CommonZeros:
    """
    두 삼원 형식의 공통 영점

    Args:
        f: (x,y,z) 동차 형식 (이중차수 (d, 0))
        g: (x,y,z) 동차 형식

    Returns:
        CommonZeros: 유리 영점 목록(정규화), 종결식, 무리근 플래그

    Raises:
        CommonFactorError: f, g가 공통 인수를 가질 때
        ValueError: 영 형식 입력
    """
    if f.is_zero() or g.is_zero():
        raise ValueError("공통 영점 계산에는 0이 아닌 형식이 필요합니다")

    F = _ternary_poly(f)
    G = _ternary_poly(g)

    common = sp.gcd(F, G)
    if common.total_degree() > 0:
        raise CommonFactorError(str(common.as_expr()))

    points = set()
    notes = []

    # y = z = 0 인 점은 종결식이 보지 못하므로 직접 확인
    if f.evaluate((1, 0, 0, 0, 0, 0)) == 0 and g.evaluate((1, 0, 0, 0, 0, 0)) == 0:
        points.add((Fraction(1), Fraction(0), Fraction(0)))

    deg_f, deg_g = F.degree(X), G.degree(X)
    if deg_f == 0 and deg_g == 0:
        resultant = sp.Poly(1, Y, Z, domain=sp.QQ)
        notes.append("두 형식 모두 x를 포함하지 않음: 영점은 [1:0:0] 뿐")
    elif deg_f == 0:
        resultant = sp.Poly(F.as_expr(), Y, Z, domain=sp.QQ)
    elif deg_g == 0:
        resultant = sp.Poly(G.as_expr(), Y, Z, domain=sp.QQ)
    else:
        resultant = sp.Poly(sp.resultant(F.as_expr(), G.as_expr(), X), Y, Z, domain=sp.QQ)

    if resultant.is_zero:
        raise CommonFactorError("종결식이 0 (공통 인수 존재)")

    roots, irrational = _rational_roots_binary(resultant)
    if irrational:
        notes.append("irrational roots present: 종결식에 2차 이상 기약 인수가 있음")

    for y0, z0 in roots:
        fx = sp.Poly(F.as_expr().subs({Y: _rational(y0), Z: _rational(z0)}), X, domain=sp.QQ)
        gx = sp.Poly(G.as_expr().subs({Y: _rational(y0), Z: _rational(z0)}), X, domain=sp.QQ)
        h = sp.gcd(fx, gx)
        if h.is_zero:
            raise CommonFactorError(f"직선 [x:{y0}:{z0}] 전체가 공통 영점")
        if h.degree() <= 0:
            # 선행 계수가 함께 소멸하는 가짜 근
            continue
        _, factors = h.factor_list()
        for factor, _mult in factors:
            if factor.degree() == 1:
                c, d = factor.all_coeffs()
                x0 = -_as_fraction(d) / _as_fraction(c)
                points.add(normalize_point((x0, y0, z0)))
            else:
                irrational = True
                notes.append(f"irrational roots present: [x:{y0}:{z0}] 위의 x 좌표")

    resultant_form = BinForm.from_sympy(resultant)
    return CommonZeros(
        points=tuple(sorted(points, reverse=True)),
        resultant=resultant_form,
        irrational_roots=irrational,
        notes=tuple(notes),
    )
