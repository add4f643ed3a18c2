"""
X의 교차환 (ω₁, ω₂ 기저)

H²: aω₁ + bω₂, H⁴: pω₁² + qω₂² (관계식 ω₁ω₂ = ω₁² + ω₂² 로 환원).
X 위 적분값은 하드코딩하지 않고 주변 공간 P = P²×P² 의 환
ℚ[ω₁,ω₂]/(ω₁³,ω₂³) 에서 [X] = 3ω₁ + 3ω₂ 와 곱해 ω₁²ω₂² 계수를 읽어 얻는다.
"""
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Dict, Tuple

import sympy as sp

from src.poly.biform import _as_fraction

W1, W2 = sp.symbols("omega1 omega2")
N_SYMBOL = sp.Symbol("N")

# [X] ∈ H²(P)
HYPERSURFACE_CLASS = (3, 3)


@dataclass(frozen=True)
class H2Class:
    """aω₁ + bω₂"""
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", _as_fraction(self.a))
        object.__setattr__(self, "b", _as_fraction(self.b))

    def __add__(self, other: "H2Class") -> "H2Class":
        return H2Class(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "H2Class") -> "H2Class":
        return H2Class(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "H2Class":
        return H2Class(-self.a, -self.b)

    def __rmul__(self, factor) -> "H2Class":
        factor = _as_fraction(factor)
        return H2Class(factor * self.a, factor * self.b)

    def coords(self) -> Tuple[Fraction, Fraction]:
        return self.a, self.b

    def __str__(self) -> str:
        return f"{self.a}ω₁ + {self.b}ω₂".replace("+ -", "- ")


@dataclass(frozen=True)
class H4Class:
    """pω₁² + qω₂² (정수 격자 기저는 ω₁²/3, ω₂²/3)"""
    p: Fraction
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "p", _as_fraction(self.p))
        object.__setattr__(self, "q", _as_fraction(self.q))

    def __add__(self, other: "H4Class") -> "H4Class":
        return H4Class(self.p + other.p, self.q + other.q)

    def __sub__(self, other: "H4Class") -> "H4Class":
        return H4Class(self.p - other.p, self.q - other.q)

    def integral_coords(self) -> Tuple[Fraction, Fraction]:
        """(ω₁²/3, ω₂²/3) 기저 좌표 (3p, 3q)"""
        return 3 * self.p, 3 * self.q

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.integral_coords())

    def coords(self) -> Tuple[Fraction, Fraction]:
        return self.p, self.q

    def __str__(self) -> str:
        return f"{self.p}ω₁² + {self.q}ω₂²".replace("+ -", "- ")


@dataclass(frozen=True)
class Polarization:
    """켈러 형식 Nω₁ + ω₂ (N > 1 조건은 판정 시점에 검사)"""
    N: Fraction

    def __post_init__(self):
        object.__setattr__(self, "N", _as_fraction(self.N))

    def as_class(self) -> H2Class:
        return H2Class(self.N, 1)


@dataclass(frozen=True)
class Divisibility:
    """H⁴ 격자 가약성 판정"""
    kind: str                       # "indivisible" | "divisible" | "non-integral" | "zero"
    integral_coords: Tuple[Fraction, Fraction]
    divisor: int = 1

    def __str__(self) -> str:
        if self.kind == "divisible":
            return f"divisible by {self.divisor}"
        if self.kind == "zero":
            return "zero class"
        return self.kind


class AmbientRing:
    """
    주변 공간 오라클

    P 의 코호몰로지환 ℚ[ω₁,ω₂]/(ω₁³,ω₂³) 에서 ∫_P ω₁²ω₂² = 1 로 두고
    ∫_X α = ∫_P α·[X] 로 X 위 적분을 계산한다.
    """

    def __init__(self):
        self.fundamental = sp.Poly(W1 ** 2 * W2 ** 2, W1, W2)
        self.hypersurface = HYPERSURFACE_CLASS[0] * W1 + HYPERSURFACE_CLASS[1] * W2

    def reduce(self, expr) -> sp.Poly:
        """ω₁³ = ω₂³ = 0 으로 절단"""
        poly = sp.Poly(sp.expand(expr), W1, W2, domain=sp.QQ)
        kept = {m: c for m, c in poly.terms() if m[0] <= 2 and m[1] <= 2}
        return sp.Poly.from_dict(kept or {(0, 0): 0}, W1, W2, domain=sp.QQ)

    def integrate_ambient(self, expr) -> Fraction:
        return _as_fraction(self.reduce(expr).coeff_monomial(W1 ** 2 * W2 ** 2))

    def integrate_on_x(self, expr) -> Fraction:
        return self.integrate_ambient(sp.expand(expr) * self.hypersurface)

    def primitive_integrals(self) -> Dict[Tuple[int, int], Fraction]:
        """∫_X ω₁^i ω₂^j (i + j = 3)"""
        return {(i, 3 - i): self.integrate_on_x(W1 ** i * W2 ** (3 - i)) for i in range(3, -1, -1)}

    def check_relation(self) -> bool:
        """
        ω₁ω₂ = ω₁² + ω₂² 가 X 위 모든 H² 류와의 짝짓기에서 성립하는지 확인

        H⁴(X) 는 H² 와의 짝짓기로 결정되므로 기저 ω₁, ω₂ 에 대해서만 보면 된다.
        """
        difference = W1 * W2 - (W1 ** 2 + W2 ** 2)
        return all(self.integrate_on_x(difference * gen) == 0 for gen in (W1, W2))


@lru_cache(maxsize=1)
def _oracle() -> Dict[Tuple[int, int], Fraction]:
    ring = AmbientRing()
    if not ring.check_relation():
        raise ValueError("관계식 ω₁ω₂ = ω₁² + ω₂² 가 오라클과 맞지 않습니다")
    return ring.primitive_integrals()


def primitive_integrals() -> Dict[Tuple[int, int], Fraction]:
    return dict(_oracle())


def h2_square(c: H2Class) -> H4Class:
    """(aω₁ + bω₂)² = (a² + 2ab)ω₁² + (b² + 2ab)ω₂²"""
    return h2_product(c, c)


def h2_product(c: H2Class, other: H2Class) -> H4Class:
    """(aω₁ + bω₂)(cω₁ + dω₂) = (ac + ad + bc)ω₁² + (bd + ad + bc)ω₂²"""
    a, b = c.coords()
    x, y = other.coords()
    mixed = a * y + b * x
    return H4Class(a * x + mixed, b * y + mixed)


def _integrate_coords(p, q, a, b, symbolic: bool = False):
    """∫_X (pω₁² + qω₂²)(aω₁ + bω₂) (계수는 Fraction 또는 sympy 식)"""
    table = _oracle()
    if symbolic:
        table = {key: sp.Rational(v.numerator, v.denominator) for key, v in table.items()}
    return (p * a * table[(3, 0)] + p * b * table[(2, 1)]
            + q * a * table[(1, 2)] + q * b * table[(0, 3)])


def integrate_x(c4: H4Class, c2: H2Class) -> Fraction:
    return _as_fraction(_integrate_coords(c4.p, c4.q, c2.a, c2.b))


def integrate_triple(c: H2Class, c_prime: H2Class, c_second: H2Class) -> Fraction:
    """삼중선형 ∫_X c·c'·c''"""
    return integrate_x(h2_product(c, c_prime), c_second)


def degree_polynomial(c1: H2Class) -> sp.Expr:
    """
    c₁·(Nω₁ + ω₂)² 를 N 의 다항식으로

    Returns:
        sp.Expr: 예) c₁ = (-2, 2) 이면 6N² - 6
    """
    n = N_SYMBOL
    p = n ** 2 + 2 * n
    q = 1 + 2 * n
    a = sp.Rational(c1.a.numerator, c1.a.denominator)
    b = sp.Rational(c1.b.numerator, c1.b.denominator)
    return sp.expand(_integrate_coords(p, q, a, b, symbolic=True))


def degree(c1: H2Class, pol: Polarization) -> Fraction:
    return integrate_x(h2_square(pol.as_class()), c1)


def slope(c1: H2Class, rank: int, pol: Polarization) -> Fraction:
    if rank < 1:
        raise ValueError(f"계수는 1 이상이어야 합니다: {rank}")
    return degree(c1, pol) / rank


def twist_chern(c1: H2Class, c2: H4Class, k: int, l: int) -> Tuple[H2Class, H4Class]:
    """
    계수 2 다발의 꼬임 E(k,l) 천 류

    c₁' = c₁ + 2t,  c₂' = c₂ + c₁·t + t²  (t = kω₁ + lω₂)
    """
    t = H2Class(k, l)
    return c1 + 2 * t, c2 + h2_product(c1, t) + h2_square(t)


def indivisibility(c: H4Class) -> Divisibility:
    coords = c.integral_coords()
    if not c.is_integral():
        return Divisibility("non-integral", coords, 0)
    if coords == (0, 0):
        # 0 은 모든 m 으로 나누어지므로 약수를 정할 수 없다
        return Divisibility("zero", coords, 0)
    g = gcd(int(coords[0]), int(coords[1]))
    if g == 1:
        return Divisibility("indivisible", coords, 1)
    return Divisibility("divisible", coords, g)
