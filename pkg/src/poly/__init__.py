"""
다항식 핵심 모듈 (이중동차 형식, 이원 형식, 이원수 확장)
"""
from .biform import (BiForm, BidegreeError, VARIABLES, monomials, monomials_of_degree,
                     variable, canonical_F)
from .binform import (BinForm, DualBinForm, binform_gcd, restrict_to_C,
                      restrict_to_eps_curve)
from .text_format import parse_biform, format_biform, format_inline, PolynomialFormatError
from .zeros import common_zeros_p2, CommonZeros, CommonFactorError, normalize_point


def arith(f: BiForm, g, op: str) -> BiForm:
    """
    형식 산술 (add / mul / scalar)

    Raises:
        BidegreeError: add에서 이중차수가 다를 때
        ValueError: 알 수 없는 연산
    """
    if op == "add":
        return f + g
    if op == "mul":
        return f * g
    if op == "scalar":
        return f.scale(g)
    raise ValueError(f"알 수 없는 연산: {op}")


def partial(f: BiForm, var: str) -> BiForm:
    return f.partial(var)


__all__ = [
    "BiForm", "BidegreeError", "VARIABLES", "monomials", "monomials_of_degree",
    "variable", "canonical_F", "arith", "partial",
    "BinForm", "DualBinForm", "binform_gcd", "restrict_to_C", "restrict_to_eps_curve",
    "parse_biform", "format_biform", "format_inline", "PolynomialFormatError",
    "common_zeros_p2", "CommonZeros", "CommonFactorError", "normalize_point",
]
