"""
H^1(End E) ≅ H^0(ν_{C/X}) 도출 (LES 연쇄)

E는 0→O→E→I_C(-2,2)→0 으로 주어지는 계수 2 다발이다.
사람이 단언하는 사실은 정확히 두 개이며 모두 로그에 남는다.
"""
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

from src.common.trace import log_step
from src.cohom.exact_seq import ZERO, ExactSeq, les_propagate
from src.cohom.line_bundles import h0_ic, hypersurface_coh, ideal_sheaf_coh

# E = Serre 구성의 다발, det E = O(-2,2)
DET_E = (-2, 2)


@dataclass(frozen=True)
class ChaseResult:
    """코호몰로지 추적 결과"""
    h1_end: int
    h0_E: Optional[int]
    h1_E: Optional[int]
    h2_E_dual: Optional[int]
    h1_E_dual: Optional[int]
    h0_normal: int
    assertions: Tuple[str, ...]
    steps: Tuple[str, ...]
    sequences: Tuple[ExactSeq, ...] = field(default_factory=tuple)


def _serre_sequence(twist_a: int, twist_b: int, name: str) -> ExactSeq:
    """0→O_X(k,l)→E(k,l)→I_C(k-2,l+2)→0 의 LES"""
    line = hypersurface_coh(twist_a, twist_b)
    ideal = ideal_sheaf_coh(twist_a + DET_E[0], twist_b + DET_E[1])
    entries = []
    for i in range(4):
        entries.append((f"H{i}(O_X({twist_a},{twist_b}))", line[i]))
        entries.append((f"H{i}({name})", None))
        entries.append((f"H{i}(I_C({twist_a + DET_E[0]},{twist_b + DET_E[1]}))", ideal[i]))
    return ExactSeq.of(*entries)


def _require(value: Optional[int], expected: int, what: str) -> int:
    if value != expected:
        raise ValueError(f"{what} = {value}, 기대값 {expected}: 추적 전제 실패")
    return value


def end_deformation_dims(h0_normal: Optional[int] = None) -> ChaseResult:
    """
    H^1(End E) 차원을 LES 연쇄로 도출

    Args:
        h0_normal: h^0(ν_{C/X}). 생략하면 기본 구성의 법다발 분할형에서 계산

    Returns:
        ChaseResult: h^1(End E) 와 중간 결과, 단언 로그

    Raises:
        InconsistentSequenceError: 전파 단계의 모순
        ValueError: 연쇄의 전제(소멸)가 성립하지 않을 때
    """
    if h0_normal is None:
        from src.construct.data import ConstructionData, normal_bundle_map
        from src.p1split.splitting import h0_of_splitting, splitting_type
        h0_normal = h0_of_splitting(splitting_type(normal_bundle_map(ConstructionData.default())))

    steps: List[str] = []
    sequences: List[ExactSeq] = []

    # 1) H^1(O_X(-2,2)) = 0  ⇒  H^1(I_C(-2,2)) = 0
    ox = hypersurface_coh(*DET_E)
    _require(ox[1], 0, "h^1(O_X(-2,2))")
    steps.append(f"h^*(O_X(-2,2)) = {ox.as_list()} (인자 완전열)")
    ic = ideal_sheaf_coh(*DET_E)
    _require(ic[1], 0, "h^1(I_C(-2,2))")
    steps.append(f"h^*(I_C(-2,2)) = {ic.as_list()} (0→I_C→O_X→O_C→0)")

    # 2) 0→O→E→I_C(-2,2)→0  ⇒  h^0(E) = 1, h^1(E) = 0
    seq_E = les_propagate(_serre_sequence(0, 0, "E"))
    sequences.append(seq_E)
    h0_E = seq_E.dim("H0(E)")
    h1_E = seq_E.dim("H1(E)")
    _require(h1_E, 0, "h^1(E)")
    steps.append(f"h^0(E) = {h0_E}, h^1(E) = {h1_E} (0→O→E→I_C(-2,2)→0)")

    # Serre 쌍대성 (K_X 자명, E* ≅ E(2,-2)): h^2(E*) = h^1(E)
    h2_E_dual = h1_E
    steps.append(f"h^2(E*) = h^1(E) = {h2_E_dual} (Serre 쌍대성, K_X 자명)")

    # 3) E* ≅ E(2,-2): 0→O_X(2,-2)→E(2,-2)→I_C→0
    ic0 = ideal_sheaf_coh(0, 0)
    _require(ic0[1], 0, "h^1(I_C)")
    steps.append(f"h^0(I_C) = {h0_ic(0, 0)} (단면 계산), h^*(I_C) = {ic0.as_list()}")
    seq_dual = les_propagate(_serre_sequence(-DET_E[0], -DET_E[1], "E*"))
    sequences.append(seq_dual)
    h1_E_dual = _require(seq_dual.dim("H1(E*)"), 0, "h^1(E*)")
    steps.append(f"h^1(E*) = h^1(E(2,-2)) = {h1_E_dual}")

    # 4) 0→E⊗I_C→E→E|_C→0:  H^0 단계와 H^1 단계
    seq_restrict = ExactSeq.of(
        ("H0(E⊗I_C)", None),
        ("H0(E)", h0_E),
        ("H0(E|_C)", None),
        ("H1(E⊗I_C)", None),
        ("H1(E)", h1_E),
    )
    seq_restrict = seq_restrict.assert_rank(
        1, ZERO,
        statement="H⁰(E)→H⁰(E|_C) is zero",
        justification="H^0(E) is generated by s, which vanishes on C",
    )
    seq_restrict = seq_restrict.assert_dim(
        2, h0_normal,
        statement=f"E|_C ≅ ν_{{C/X}}, so h⁰(E|_C) = h⁰(ν) = {h0_normal}",
        justification="the zero locus of s has normal bundle the restriction of E to it",
    )
    seq_restrict = les_propagate(seq_restrict)
    sequences.append(seq_restrict)
    h1_twisted = seq_restrict.dim("H1(E⊗I_C)")
    if h1_twisted is None:
        raise ValueError("h^1(E⊗I_C)가 결정되지 않았습니다")
    steps.append(f"h^1(E⊗I_C) = h^0(E|_C) = {h1_twisted}")

    # 5) E* ⊗ (0→O→E→I_C(-2,2)→0):  H^1(E*) → H^1(End E) → H^1(E⊗I_C) → H^2(E*)
    seq_end = les_propagate(ExactSeq.of(
        ("H1(E*)", h1_E_dual),
        ("H1(End E)", None),
        ("H1(E⊗I_C)", h1_twisted),
        ("H2(E*)", h2_E_dual),
    ))
    sequences.append(seq_end)
    h1_end = seq_end.dim("H1(End E)")
    if h1_end is None:
        raise ValueError("h^1(End E)가 결정되지 않았습니다")
    steps.append(f"h^1(End E) = h^1(E⊗I_C) = {h1_end}")

    assertions = tuple(fact.describe() for fact in seq_restrict.assertions)
    log_step(f"✅ H^1(End E) 추적 완료: {h1_end} (단언 {len(assertions)}개)")

    return ChaseResult(
        h1_end=h1_end,
        h0_E=h0_E,
        h1_E=h1_E,
        h2_E_dual=h2_E_dual,
        h1_E_dual=h1_E_dual,
        h0_normal=h0_normal,
        assertions=assertions,
        steps=tuple(steps),
        sequences=tuple(sequences),
    )
