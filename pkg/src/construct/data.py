"""
구성 입력 데이터 (F, 섭동 p, 선다발 L, 곡선 류 [C])
"""
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Union

from src.chern.ring import H4Class
from src.cohom.line_bundles import LineBundle
from src.common.trace import log_step
from src.p1split.splitting import BundleMapP1
from src.poly.biform import BiForm, canonical_F
from src.poly.binform import restrict_to_C
from src.poly.text_format import format_biform, parse_biform

FORM_BIDEGREE = (3, 3)

# f = {x = u = v = 0}: p 의 각 항은 u, v, x²y 중 하나로 나누어떨어져야 한다
U_EXPONENT = (0, 0, 0, 1, 0, 0)
V_EXPONENT = (0, 0, 0, 0, 1, 0)
X2Y_EXPONENT = (2, 1, 0, 0, 0, 0)


def offending_terms(p: BiForm) -> List[tuple]:
    """u, v, x²y 어느 것으로도 나누어떨어지지 않는 p 의 항"""
    bad = []
    for exponent, _coeff in p.items():
        term = BiForm.monomial(exponent)
        if not any(term.is_divisible_by_monomial(m) for m in (U_EXPONENT, V_EXPONENT, X2Y_EXPONENT)):
            bad.append(exponent)
    return bad


@dataclass(frozen=True)
class ConstructionData:
    """
    Serre 구성과 기하 검사의 입력

    Attributes:
        F: (3,3) 형식 (기본 4항 형식 + p)
        p: 섭동 (0 가능)
        L: X 위 선다발, 기본 O_X(-2,2)
        curve_class: [C] ∈ H⁴(X), 기본 ω₂²/3
    """
    F: BiForm
    p: BiForm
    L: LineBundle = field(default_factory=lambda: LineBundle("X", -2, 2))
    curve_class: H4Class = field(default_factory=lambda: H4Class(0, Fraction(1, 3)))

    def __post_init__(self):
        if self.F.bidegree != FORM_BIDEGREE:
            raise ValueError(f"F 의 이중차수는 (3,3)이어야 합니다: {self.F.bidegree}")
        if not self.p.is_zero() and self.p.bidegree != FORM_BIDEGREE:
            raise ValueError(f"p 의 이중차수는 (3,3)이어야 합니다: {self.p.bidegree}")
        if self.F - self.p != canonical_F():
            raise ValueError("F - p 가 기본 4항 형식과 다릅니다")
        bad = offending_terms(self.p)
        if bad:
            raise ValueError(f"p does not vanish on f: 항 {bad[:3]} 이 u, v, x²y 로 나누어떨어지지 않음")

    @classmethod
    def default(cls) -> "ConstructionData":
        return cls(canonical_F(), BiForm.zero(FORM_BIDEGREE))

    @classmethod
    def with_perturbation(cls, p: Optional[BiForm]) -> "ConstructionData":
        if p is None or p.is_zero():
            return cls.default()
        return cls(canonical_F() + p, p)

    def is_unperturbed(self) -> bool:
        return self.p.is_zero()

    def canonical_text(self) -> str:
        """입력 요약(digest)용 정규 텍스트"""
        return f"F:\n{format_biform(self.F)}\np:\n{format_biform(self.p)}\n"


def load_perturbation(path: Union[str, Path]) -> BiForm:
    """
    파일에서 섭동 p 읽기

    Raises:
        PolynomialFormatError: 형식 오류
        OSError: 파일을 읽을 수 없을 때
    """
    text = Path(path).read_text(encoding="utf-8")
    p = parse_biform(text, FORM_BIDEGREE)
    log_step(f"📁 섭동 로드: {path} ({len(p)}개 항)")
    return p


def normal_bundle_map(data: ConstructionData) -> BundleMapP1:
    """
    법다발 사상 O(1)⊕O⊕O → O(3) 의 성분 (∂F/∂x|_C, ∂F/∂u|_C, ∂F/∂v|_C)
    """
    F = data.F
    entries = tuple(restrict_to_C(F.partial(var)) for var in ("x", "u", "v"))
    return BundleMapP1((1, 0, 0), 3, entries)
