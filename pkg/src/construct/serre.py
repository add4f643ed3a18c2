"""
Serre 구성: 0 → O_X → E → I_C ⊗ L → 0

존재 조건 H²(L*) = 0 을 확인하고 E 와 A = E(1,-1) 의 천 류를 기록한다.
확장류 자체는 만들지 않는다.
"""
import sys
from dataclasses import dataclass, field, replace
from typing import Tuple, Union

from src.chern.ring import H2Class, H4Class, twist_chern
from src.cohom.line_bundles import LineBundle, hypersurface_coh
from src.common.trace import log_step
from src.construct.data import ConstructionData

FEASIBLE = "feasible"
UNKNOWN = "unknown"

# A = E(1,-1)
A_TWIST = (1, -1)


class SerreInfeasibleError(ValueError):
    def __init__(self, bundle: LineBundle, h2: object):
        super().__init__(f"not feasible: h²({bundle.dual()}) = {h2} ≠ 0")


def _as_bundle(L: Union[LineBundle, Tuple[int, int]]) -> LineBundle:
    if isinstance(L, LineBundle):
        return L
    return LineBundle("X", int(L[0]), int(L[1]))


def serre_feasible(L: Union[LineBundle, Tuple[int, int]]) -> str:
    """
    H²(L*) = 0 이면 feasible, 아니면 unknown ([Z] 의 류 자체는 다루지 않음)

    Args:
        L: X 위 선다발 O_X(a,b) 또는 (a, b)
    """
    bundle = _as_bundle(L)
    h2 = hypersurface_coh(-bundle.a, -bundle.b)[2]
    return FEASIBLE if h2 == 0 else UNKNOWN


@dataclass(frozen=True)
class SequenceRecord:
    """
    계수 2 다발을 정의하는 짧은 완전열 기록

    Attributes:
        name: 다발 이름 ("E", "A" …)
        twist: E 에 대한 꼬임 (k, l)
        c1, c2: 천 류
        sequence: 0 → O_X(k,l) → E(k,l) → I_C(k+a, l+b) → 0 표기
        notes: 출처 메모
        derived: 꼬임으로 얻은 기록들
    """
    name: str
    twist: Tuple[int, int]
    c1: H2Class
    c2: H4Class
    sequence: str
    rank: int = 2
    notes: Tuple[str, ...] = ()
    derived: Tuple["SequenceRecord", ...] = field(default_factory=tuple)

    def twisted(self, k: int, l: int, name: str, det: Tuple[int, int]) -> "SequenceRecord":
        c1, c2 = twist_chern(self.c1, self.c2, k, l)
        tk, tl = self.twist[0] + k, self.twist[1] + l
        sequence = f"0 → O_X({tk},{tl}) → {name} → I_C({tk + det[0]},{tl + det[1]}) → 0"
        note = f"{self.name}({k},{l}) 꼬임 공식 c₁' = c₁ + 2t, c₂' = c₂ + c₁t + t²"
        return SequenceRecord(name, (tk, tl), c1, c2, sequence, notes=(note,))


def build_E(data: ConstructionData) -> SequenceRecord:
    """
    Serre 구성의 E 기록 (A = E(1,-1) 포함)

    Returns:
        SequenceRecord: c₁(E) = c₁(L), c₂(E) = [C]

    Raises:
        SerreInfeasibleError: H²(L*) ≠ 0 일 때
    """
    bundle = _as_bundle(data.L)
    if serre_feasible(bundle) != FEASIBLE:
        error = SerreInfeasibleError(bundle, hypersurface_coh(-bundle.a, -bundle.b)[2])
        print(f"❌ Serre 구성 불가: {error}", file=sys.stderr)
        raise error

    det = (bundle.a, bundle.b)
    record = SequenceRecord(
        name="E",
        twist=(0, 0),
        c1=H2Class(bundle.a, bundle.b),
        c2=data.curve_class,
        sequence=f"0 → O_X → E → I_C({bundle.a},{bundle.b}) → 0",
        notes=(
            f"H²({bundle.dual()}) = 0 이므로 E 와 단면 s 가 존재",
            "c₁(E) = c₁(L), c₂(E) = [C] (s 의 영점 궤적)",
        ),
    )
    a_record = record.twisted(*A_TWIST, name="A", det=det)
    log_step(f"✅ E 구성: c₁ = {record.c1}, c₂ = {record.c2}; A: c₁ = {a_record.c1}, c₂ = {a_record.c2}")
    return replace(record, derived=(a_record,))
