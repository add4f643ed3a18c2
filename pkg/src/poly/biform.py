"""
P²×P² 위의 이중동차(bihomogeneous) 다항식 모듈

좌표는 (x,y,z; u,v,w) 이며 계수는 항상 약분된 유리수(Fraction)로 저장한다.
"""
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple

import sympy as sp

VARIABLES = ("x", "y", "z", "u", "v", "w")
FIRST_FACTOR = ("x", "y", "z")
SECOND_FACTOR = ("u", "v", "w")

Exponent = Tuple[int, int, int, int, int, int]
Bidegree = Tuple[int, int]

SYMBOLS = sp.symbols("x y z u v w")


class BidegreeError(ValueError):
    """이중차수 불일치 또는 비동차 항"""


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, sp.Rational):
        return Fraction(int(value.p), int(value.q))
    return Fraction(value)


def monomials_of_degree(d: int) -> List[Tuple[int, int, int]]:
    """세 변수 d차 단항식 지수 목록 (사전식 내림차순)"""
    if d < 0:
        return []
    return [(i, j, d - i - j) for i in range(d, -1, -1) for j in range(d - i, -1, -1)]


def monomials(d1: int, d2: int) -> List[Exponent]:
    """
    이중차수 (d1, d2) 단항식 지수 전체

    Args:
        d1: (x,y,z) 차수
        d2: (u,v,w) 차수

    Returns:
        List[Exponent]: 사전식 내림차순 지수 벡터
    """
    return [a + b for a, b in product(monomials_of_degree(d1), monomials_of_degree(d2))]


class BiForm:
    """유리수 계수 이중동차 다항식 (불변 객체)"""

    __slots__ = ("_terms", "_bidegree")

    def __init__(self, terms: Optional[Mapping[Exponent, object]] = None,
                 bidegree: Optional[Bidegree] = None):
        """
        Args:
            terms: 지수 벡터 -> 계수 사상 (0 계수는 버림)
            bidegree: 선언 이중차수. 생략하면 항에서 추론 (영다항식은 (0,0))

        Raises:
            BidegreeError: 항의 차수가 선언 이중차수와 다를 때
        """
        cleaned: Dict[Exponent, Fraction] = {}
        for exponent, coeff in (terms or {}).items():
            exponent = tuple(int(e) for e in exponent)
            if len(exponent) != 6 or any(e < 0 for e in exponent):
                raise BidegreeError(f"잘못된 지수 벡터: {exponent}")
            value = _as_fraction(coeff)
            if value == 0:
                continue
            cleaned[exponent] = cleaned.get(exponent, Fraction(0)) + value
            if cleaned[exponent] == 0:
                del cleaned[exponent]

        if bidegree is None:
            if cleaned:
                first = next(iter(cleaned))
                bidegree = (sum(first[:3]), sum(first[3:]))
            else:
                bidegree = (0, 0)
        bidegree = (int(bidegree[0]), int(bidegree[1]))

        for exponent in cleaned:
            if (sum(exponent[:3]), sum(exponent[3:])) != bidegree:
                raise BidegreeError(
                    f"비동차 항 {exponent}: 선언 이중차수 {bidegree}와 불일치"
                )

        self._terms = cleaned
        self._bidegree = bidegree

    # ------------------------------------------------------------------
    # 생성자
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls, bidegree: Bidegree) -> "BiForm":
        return cls({}, bidegree)

    @classmethod
    def monomial(cls, exponent: Sequence[int], coeff=1) -> "BiForm":
        return cls({tuple(exponent): coeff})

    @classmethod
    def from_sympy(cls, expr, bidegree: Optional[Bidegree] = None) -> "BiForm":
        """sympy 식/Poly에서 변환"""
        poly = expr if isinstance(expr, sp.Poly) else sp.Poly(expr, *SYMBOLS, domain=sp.QQ)
        if tuple(poly.gens) != SYMBOLS:
            poly = sp.Poly(poly.as_expr(), *SYMBOLS, domain=sp.QQ)
        terms = {tuple(monom): coeff for monom, coeff in poly.terms() if coeff != 0}
        return cls(terms, bidegree)

    # ------------------------------------------------------------------
    # 조회
    # ------------------------------------------------------------------
    @property
    def bidegree(self) -> Bidegree:
        return self._bidegree

    @property
    def terms(self) -> Dict[Exponent, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[Exponent, Fraction]]:
        """사전식 내림차순으로 (지수, 계수) 순회"""
        for exponent in sorted(self._terms, reverse=True):
            yield exponent, self._terms[exponent]

    def coefficient(self, exponent: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(exponent), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    # ------------------------------------------------------------------
    # 산술
    # ------------------------------------------------------------------
    def __add__(self, other: "BiForm") -> "BiForm":
        if not isinstance(other, BiForm):
            return NotImplemented
        if self.bidegree != other.bidegree and not (self.is_zero() or other.is_zero()):
            raise BidegreeError(f"이중차수 불일치: {self.bidegree} + {other.bidegree}")
        bidegree = other.bidegree if self.is_zero() else self.bidegree
        terms = dict(self._terms)
        for exponent, coeff in other._terms.items():
            terms[exponent] = terms.get(exponent, Fraction(0)) + coeff
        return BiForm(terms, bidegree)

    def __neg__(self) -> "BiForm":
        return self.scale(-1)

    def __sub__(self, other: "BiForm") -> "BiForm":
        if not isinstance(other, BiForm):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "BiForm":
        if isinstance(other, BiForm):
            terms: Dict[Exponent, Fraction] = {}
            for e1, c1 in self._terms.items():
                for e2, c2 in other._terms.items():
                    exponent = tuple(a + b for a, b in zip(e1, e2))
                    terms[exponent] = terms.get(exponent, Fraction(0)) + c1 * c2
            bidegree = (self.bidegree[0] + other.bidegree[0],
                        self.bidegree[1] + other.bidegree[1])
            return BiForm(terms, bidegree)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor) -> "BiForm":
        factor = _as_fraction(factor)
        return BiForm({e: c * factor for e, c in self._terms.items()}, self.bidegree)

    def __pow__(self, exponent: int) -> "BiForm":
        result = BiForm({(0,) * 6: 1})
        for _ in range(int(exponent)):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if not isinstance(other, BiForm):
            return NotImplemented
        # 영다항식은 이중차수와 무관하게 같다
        if self.is_zero() and other.is_zero():
            return True
        return self.bidegree == other.bidegree and self._terms == other._terms

    def __hash__(self) -> int:
        if self.is_zero():
            return hash(("BiForm", 0))
        return hash((self.bidegree, frozenset(self._terms.items())))

    # ------------------------------------------------------------------
    # 미분 / 대입
    # ------------------------------------------------------------------
    def partial(self, var: str) -> "BiForm":
        """
        형식적 편미분

        Args:
            var: 'x','y','z','u','v','w' 중 하나

        Returns:
            BiForm: 해당 인자의 차수가 1 줄어든 형식
        """
        if var not in VARIABLES:
            raise ValueError(f"알 수 없는 변수: {var}")
        index = VARIABLES.index(var)
        terms: Dict[Exponent, Fraction] = {}
        for exponent, coeff in self._terms.items():
            if exponent[index] == 0:
                continue
            lowered = list(exponent)
            lowered[index] -= 1
            terms[tuple(lowered)] = coeff * exponent[index]
        d1, d2 = self.bidegree
        bidegree = (d1 - 1, d2) if index < 3 else (d1, d2 - 1)
        return BiForm(terms, bidegree)

    def evaluate(self, point: Sequence) -> Fraction:
        """유리수 점 (x,y,z,u,v,w)에서의 값"""
        values = [_as_fraction(c) for c in point]
        total = Fraction(0)
        for exponent, coeff in self._terms.items():
            term = coeff
            for value, e in zip(values, exponent):
                if e:
                    term *= value ** e
            total += term
        return total

    def substitute_fibre(self) -> "BiForm":
        """u = v = 0, w = 1 대입: (x,y,z)만의 삼원 형식 (이중차수 (d1, 0))"""
        terms: Dict[Exponent, Fraction] = {}
        for exponent, coeff in self._terms.items():
            if exponent[3] or exponent[4]:
                continue
            key = exponent[:3] + (0, 0, 0)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        return BiForm(terms, (self.bidegree[0], 0))

    def is_divisible_by_monomial(self, exponent: Sequence[int]) -> bool:
        return all(all(a >= b for a, b in zip(e, exponent)) for e in self._terms)

    # ------------------------------------------------------------------
    # 변환
    # ------------------------------------------------------------------
    def to_sympy(self) -> sp.Poly:
        """sympy Poly (QQ, 생성원 x,y,z,u,v,w)"""
        expr = sp.Integer(0)
        for exponent, coeff in self._terms.items():
            term = sp.Rational(coeff.numerator, coeff.denominator)
            for symbol, e in zip(SYMBOLS, exponent):
                if e:
                    term *= symbol ** e
            expr += term
        return sp.Poly(expr, *SYMBOLS, domain=sp.QQ)

    def __repr__(self) -> str:
        from src.poly.text_format import format_inline
        return f"BiForm({format_inline(self)}; bidegree={self.bidegree})"


def variable(name: str) -> BiForm:
    """단일 변수 형식"""
    exponent = [0] * 6
    exponent[VARIABLES.index(name)] = 1
    return BiForm.monomial(exponent)


def canonical_F() -> BiForm:
    """
    기본 (3,3) 형식 x²yw³ + z²yvw² + z³uw² + (x+y)³vw²

    Returns:
        BiForm: 섭동 p를 더하기 전의 F
    """
    x, y, z, u, v, w = (variable(n) for n in VARIABLES)
    return (x ** 2 * y * w ** 3
            + z ** 2 * y * v * w ** 2
            + z ** 3 * u * w ** 2
            + (x + y) ** 3 * v * w ** 2)
