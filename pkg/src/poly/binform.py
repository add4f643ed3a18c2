"""
이원 형식(binary form)과 이원수(dual number) 계수 확장

BinForm은 y^{d-k} z^k (k = 0..d) 의 계수 목록이다. 변수 이름은 출력용일 뿐이며
(α, β) 형식도 같은 타입으로 다룬다.
"""
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy as sp

from src.poly.biform import BiForm, BidegreeError, _as_fraction


class BinForm:
    """유리수 계수 이원 형식 (선언 차수 고정, 불변 객체)"""

    __slots__ = ("_coeffs", "_degree", "_variables")

    def __init__(self, coeffs: Sequence, degree: Optional[int] = None,
                 variables: Tuple[str, str] = ("y", "z")):
        """
        Args:
            coeffs: coeffs[k] = y^{d-k} z^k 의 계수
            degree: 선언 차수 (생략 시 len(coeffs) - 1)
            variables: 출력용 변수 이름 쌍
        """
        values = [_as_fraction(c) for c in coeffs]
        if degree is None:
            degree = len(values) - 1
        if degree < 0:
            raise BidegreeError(f"이원 형식 차수는 0 이상이어야 합니다: {degree}")
        if len(values) > degree + 1:
            if any(values[degree + 1:]):
                raise BidegreeError(f"차수 {degree}를 넘는 계수가 있습니다")
            values = values[:degree + 1]
        values += [Fraction(0)] * (degree + 1 - len(values))
        self._coeffs = tuple(values)
        self._degree = degree
        self._variables = tuple(variables)

    @classmethod
    def zero(cls, degree: int, variables: Tuple[str, str] = ("y", "z")) -> "BinForm":
        return cls([], degree, variables)

    @classmethod
    def from_sympy(cls, poly: sp.Poly, degree: Optional[int] = None,
                   variables: Tuple[str, str] = ("y", "z")) -> "BinForm":
        """두 생성원 sympy Poly에서 변환 (동차라고 가정)"""
        if degree is None:
            degree = 0 if poly.is_zero else poly.total_degree()
        coeffs = [Fraction(0)] * (degree + 1)
        for (i, k), coeff in poly.terms():
            if coeff == 0:
                continue
            if i + k != degree:
                raise BidegreeError(f"동차가 아닌 이원 형식: 항 y^{i} z^{k}, 차수 {degree}")
            coeffs[k] = _as_fraction(coeff)
        return cls(coeffs, degree, variables)

    # ------------------------------------------------------------------
    @property
    def degree(self) -> int:
        return self._degree

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def variables(self) -> Tuple[str, str]:
        return self._variables

    def coefficient(self, k: int) -> Fraction:
        """y^{d-k} z^k 의 계수"""
        if 0 <= k <= self._degree:
            return self._coeffs[k]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not any(self._coeffs)

    def leading_coefficient(self) -> Fraction:
        for c in self._coeffs:
            if c:
                return c
        return Fraction(0)

    def evaluate(self, a, b) -> Fraction:
        a, b = _as_fraction(a), _as_fraction(b)
        d = self._degree
        return sum((c * a ** (d - k) * b ** k for k, c in enumerate(self._coeffs)), Fraction(0))

    # ------------------------------------------------------------------
    def __add__(self, other: "BinForm") -> "BinForm":
        if not isinstance(other, BinForm):
            return NotImplemented
        if self._degree != other._degree:
            if other.is_zero():
                return self
            if self.is_zero():
                return other
            raise BidegreeError(f"이원 형식 차수 불일치: {self._degree} + {other._degree}")
        return BinForm([a + b for a, b in zip(self._coeffs, other._coeffs)],
                       self._degree, self._variables)

    def __neg__(self) -> "BinForm":
        return self.scale(-1)

    def __sub__(self, other: "BinForm") -> "BinForm":
        return self + (-other)

    def __mul__(self, other) -> "BinForm":
        if isinstance(other, BinForm):
            degree = self._degree + other._degree
            coeffs = [Fraction(0)] * (degree + 1)
            for i, a in enumerate(self._coeffs):
                if not a:
                    continue
                for j, b in enumerate(other._coeffs):
                    if b:
                        coeffs[i + j] += a * b
            return BinForm(coeffs, degree, self._variables)
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, factor) -> "BinForm":
        factor = _as_fraction(factor)
        return BinForm([c * factor for c in self._coeffs], self._degree, self._variables)

    def monic(self) -> "BinForm":
        lead = self.leading_coefficient()
        if lead == 0:
            raise ValueError("영 형식은 monic으로 만들 수 없습니다")
        return self.scale(1 / lead)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BinForm):
            return NotImplemented
        if self.is_zero() and other.is_zero():
            return True
        return self._degree == other._degree and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self.is_zero():
            return hash(("BinForm", 0))
        return hash((self._degree, self._coeffs))

    # ------------------------------------------------------------------
    def sympy_gens(self) -> Tuple[sp.Symbol, sp.Symbol]:
        return sp.symbols(" ".join(self._variables))

    def to_sympy(self) -> sp.Poly:
        a, b = self.sympy_gens()
        d = self._degree
        expr = sum((sp.Rational(c.numerator, c.denominator) * a ** (d - k) * b ** k
                    for k, c in enumerate(self._coeffs) if c), sp.Integer(0))
        return sp.Poly(expr, a, b, domain=sp.QQ)

    def exact_quotient(self, divisor: "BinForm") -> "BinForm":
        """
        나머지 없는 나눗셈

        Raises:
            ValueError: 나누어떨어지지 않을 때
        """
        if divisor.is_zero():
            raise ZeroDivisionError("영 형식으로 나눌 수 없습니다")
        gens = self.sympy_gens()
        quotient, remainder = sp.div(self.to_sympy(), sp.Poly(divisor.to_sympy().as_expr(), *gens, domain=sp.QQ))
        if not remainder.is_zero:
            raise ValueError(f"{self}는 {divisor}로 나누어떨어지지 않습니다")
        return BinForm.from_sympy(quotient, self._degree - divisor.degree, self._variables)

    def __repr__(self) -> str:
        return f"BinForm({self.to_text()})"

    def to_text(self) -> str:
        if self.is_zero():
            return "0"
        a, b = self._variables
        d = self._degree
        pieces = []
        for k, c in enumerate(self._coeffs):
            if not c:
                continue
            factors = []
            if d - k:
                factors.append(a if d - k == 1 else f"{a}^{d - k}")
            if k:
                factors.append(b if k == 1 else f"{b}^{k}")
            monomial = "*".join(factors)
            if not monomial:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(monomial)
            elif c == -1:
                pieces.append(f"-{monomial}")
            else:
                pieces.append(f"{c}*{monomial}")
        return " + ".join(pieces).replace("+ -", "- ")

    __str__ = to_text


class DualBinForm:
    """f0 + ε f1 (ε² = 0) 형태의 이원수 계수 이원 형식"""

    __slots__ = ("f0", "f1")

    def __init__(self, f0: BinForm, f1: Optional[BinForm] = None):
        if f1 is None:
            f1 = BinForm.zero(f0.degree, f0.variables)
        if f0.degree != f1.degree:
            raise BidegreeError(f"ε 성분 차수 불일치: {f0.degree} vs {f1.degree}")
        self.f0 = f0
        self.f1 = f1

    @property
    def degree(self) -> int:
        return self.f0.degree

    @classmethod
    def eps(cls, f1: BinForm) -> "DualBinForm":
        """순수 ε 성분 ε·f1"""
        return cls(BinForm.zero(f1.degree, f1.variables), f1)

    def __add__(self, other: "DualBinForm") -> "DualBinForm":
        return DualBinForm(self.f0 + other.f0, self.f1 + other.f1)

    def __mul__(self, other) -> "DualBinForm":
        if isinstance(other, BinForm):
            other = DualBinForm(other)
        if not isinstance(other, DualBinForm):
            return DualBinForm(self.f0.scale(other), self.f1.scale(other))
        # (a + εb)(c + εd) = ac + ε(ad + bc), ε² 항은 버림
        return DualBinForm(self.f0 * other.f0, self.f0 * other.f1 + self.f1 * other.f0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, DualBinForm):
            return NotImplemented
        return self.f0 == other.f0 and self.f1 == other.f1

    def __hash__(self) -> int:
        return hash((self.f0, self.f1))

    def __repr__(self) -> str:
        return f"DualBinForm({self.f0} + ε·({self.f1}))"


def binform_gcd(forms: Sequence[BinForm]) -> BinForm:
    """
    이원 형식들의 monic 최대공약수

    gcd = 1 이면 공통 사영 영점이 (대수적 폐포에서도) 없다.

    Args:
        forms: 이원 형식 목록 (최소 하나는 0이 아니어야 함)

    Returns:
        BinForm: monic gcd

    Raises:
        ValueError: 모든 입력이 0일 때
    """
    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        raise ValueError("all-zero input: 최대공약수를 정의할 수 없습니다")

    variables = nonzero[0].variables
    gens = sp.symbols(" ".join(variables))
    result = sp.Poly(nonzero[0].to_sympy().as_expr(), *gens, domain=sp.QQ)
    for form in nonzero[1:]:
        result = sp.gcd(result, sp.Poly(form.to_sympy().as_expr(), *gens, domain=sp.QQ))
    return BinForm.from_sympy(result, variables=variables).monic()


def restrict_to_C(form: BiForm) -> BinForm:
    """
    곡선 C = {x = u = v = 0} 로 제한: x=0, u=0, v=0, w=1 대입

    Returns:
        BinForm: (y, z)에 대한 d1차 이원 형식
    """
    d1 = form.bidegree[0]
    if d1 < 0:
        return BinForm.zero(0)
    coeffs = [Fraction(0)] * (d1 + 1)
    for (i, j, k, p, q, r), coeff in form.items():
        if i or p or q:
            continue
        coeffs[k] += coeff
    return BinForm(coeffs, d1)


def restrict_to_eps_curve(form: BiForm, section: BinForm) -> DualBinForm:
    """
    두꺼워진 곡선 C_ε = {u = v = 0, x = ε·s} 로 제한

    x^i 은 i ≥ 2 이면 ε² 때문에 사라지고, i = 1 이면 ε·s 가 된다.

    Args:
        form: 이중동차 형식
        section: 1차 이원 형식 s = αy + βz

    Returns:
        DualBinForm: f0 + ε f1
    """
    if section.degree != 1:
        raise BidegreeError(f"단면 s는 1차 형식이어야 합니다: 차수 {section.degree}")
    d1 = form.bidegree[0]
    if d1 < 0:
        return DualBinForm(BinForm.zero(0))

    base = [Fraction(0)] * (d1 + 1)
    linear_part = [Fraction(0)] * max(d1, 1)
    for (i, j, k, p, q, r), coeff in form.items():
        if p or q:
            continue
        if i == 0:
            base[k] += coeff
        elif i == 1:
            linear_part[k] += coeff
    f0 = BinForm(base, d1)
    if d1 == 0:
        return DualBinForm(f0)
    f1 = BinForm(linear_part, d1 - 1) * section
    return DualBinForm(f0, f1)
