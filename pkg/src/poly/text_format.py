"""
다항식 텍스트 형식 (CLI와 공유)

한 줄에 한 항:  <num>/<den> x^i y^j z^k u^p v^q w^r
- 생략된 변수의 지수는 0, '/den'은 생략 가능, 계수가 없으면 1
- '#' 이후는 주석
"""
import re
from fractions import Fraction
from typing import Optional

from src.poly.biform import VARIABLES, Bidegree, BiForm, BidegreeError


class PolynomialFormatError(ValueError):
    """다항식 텍스트 파싱 오류"""


_COEFF = re.compile(r"^[+-]?\d+(/\d+)?$")
_POWER = re.compile(r"^([xyzuvw])(?:\^(\d+))?$")


def parse_biform(text: str, bidegree: Optional[Bidegree] = None) -> BiForm:
    """
    텍스트를 BiForm으로 파싱

    Args:
        text: 다항식 텍스트
        bidegree: 기대 이중차수 (있으면 검사, 항이 없을 때 영다항식 차수로 사용)

    Returns:
        BiForm: 파싱 결과

    Raises:
        PolynomialFormatError: 형식 오류 또는 이중차수 불일치
    """
    terms = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue

        tokens = line.split()
        coeff = Fraction(1)
        if _COEFF.match(tokens[0]):
            try:
                coeff = Fraction(tokens[0])
            except (ValueError, ZeroDivisionError) as e:
                raise PolynomialFormatError(f"{line_no}행: 잘못된 계수 '{tokens[0]}' ({e})")
            tokens = tokens[1:]
        elif tokens[0] in ("-", "+"):
            coeff = Fraction(-1 if tokens[0] == "-" else 1)
            tokens = tokens[1:]

        exponent = [0] * 6
        for token in tokens:
            match = _POWER.match(token)
            if not match:
                raise PolynomialFormatError(f"{line_no}행: 해석할 수 없는 토큰 '{token}'")
            index = VARIABLES.index(match.group(1))
            exponent[index] += int(match.group(2) or 1)

        key = tuple(exponent)
        terms[key] = terms.get(key, Fraction(0)) + coeff

    try:
        form = BiForm(terms, bidegree)
    except BidegreeError as e:
        raise PolynomialFormatError(f"이중차수 검사 실패: {e}")
    return form


def _monomial_text(exponent) -> str:
    parts = []
    for name, e in zip(VARIABLES, exponent):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return " ".join(parts)


def format_biform(form: BiForm) -> str:
    """
    정규 텍스트 형식 (사전식 내림차순, 한 줄에 한 항)

    영다항식은 이중차수를 주석으로만 남긴다.
    """
    lines = [f"# bidegree {form.bidegree[0]} {form.bidegree[1]}"]
    for exponent, coeff in form.items():
        monomial = _monomial_text(exponent)
        lines.append(f"{coeff} {monomial}".rstrip())
    return "\n".join(lines) + "\n"


def format_inline(form: BiForm) -> str:
    """한 줄 표기 (인증서/로그용)"""
    if form.is_zero():
        return "0"
    pieces = []
    for exponent, coeff in form.items():
        monomial = _monomial_text(exponent).replace(" ", "*")
        if not monomial:
            pieces.append(str(coeff))
        elif coeff == 1:
            pieces.append(monomial)
        elif coeff == -1:
            pieces.append(f"-{monomial}")
        else:
            pieces.append(f"{coeff}*{monomial}")
    return " + ".join(pieces).replace("+ -", "- ")
