"""
Nω₁ + ω₂ 에 대한 E 의 기울기 안정성 검사

부분 선다발 O(k,l) ↪ E 후보를 유한 상자 안에서 모두 분류한다.
- 단면 상한 h⁰(E(-k,-l)) ≤ h⁰(O_X(-k,-l)) + h⁰(I_C(-k-2,-l+2)) 가 0 이면 제외
- 기울기 차 μ(O(k,l)) - μ(E) < 0 이면 제외
- 나머지는 확장류 없이는 판정할 수 없으므로 UNRESOLVED_LIFTING
"""
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Tuple, Union

import pandas as pd

from src.chern.ring import N_SYMBOL, H2Class, Polarization, degree, degree_polynomial, slope
from src.cohom.chase import DET_E
from src.cohom.line_bundles import h0_ic, h0_ox
from src.common.trace import log_shape, log_step, snapshot_df
from src.poly.biform import _as_fraction

EXCLUDED_BY_DEGREE = "EXCLUDED_BY_DEGREE"
EXCLUDED_NO_SECTIONS = "EXCLUDED_NO_SECTIONS"
UNRESOLVED_LIFTING = "UNRESOLVED_LIFTING"

STABLE = "STABLE"
CONDITIONALLY_STABLE = "CONDITIONALLY_STABLE"
UNSTABLE = "UNSTABLE"

C1_E = H2Class(*DET_E)
E_RANK = 2

PICARD_NOTE = "X 위 선다발은 O(k,l) 뿐이라는 사실은 외부 사실로 신뢰함 (이중쌍대로 부분 선다발만 검사)"
LIFTING_NOTE = (
    "UNRESOLVED 후보는 I_C 의 단면이 (5)의 연결 준동형을 거쳐 E 의 단면으로 올라가는지에 달려 있으며 "
    "이는 확장류가 있어야 판정할 수 있다"
)


class PolarizationError(ValueError):
    def __init__(self, N):
        super().__init__(f"polarization must satisfy N > 1 (N = {N})")


@dataclass(frozen=True)
class Candidate:
    """부분 선다발 후보 O(k,l)"""
    k: int
    l: int
    status: str
    upper_bound: int
    slope_gap: Fraction
    branch: str = ""


@dataclass
class StabilityReport:
    """안정성 판정 결과 (후보는 (k,l) 순 정렬)"""
    N: Fraction
    candidates: List[Candidate]
    verdict: str
    unresolved: List[Tuple[int, int]] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    def to_frame(self) -> pd.DataFrame:
        df = pd.DataFrame([{
            "k": c.k, "l": c.l, "branch": c.branch, "upper_bound": c.upper_bound,
            "slope_gap": str(c.slope_gap), "status": c.status,
        } for c in self.candidates], columns=["k", "l", "branch", "upper_bound", "slope_gap", "status"])
        log_shape(df, f"stability_N={self.N}")
        return df

    def verdict_text(self) -> str:
        if self.verdict == CONDITIONALLY_STABLE:
            return f"{CONDITIONALLY_STABLE}({self.unresolved})"
        return self.verdict


def parse_polarization(value: Union[str, int, Fraction]) -> Fraction:
    """
    'N' 텍스트를 유리수로 (N > 1 검사 포함)

    Raises:
        PolarizationError: N ≤ 1
        ValueError: 유리수가 아닐 때
    """
    N = Fraction(value) if isinstance(value, str) else _as_fraction(value)
    if N <= 1:
        raise PolarizationError(N)
    return N


def section_upper_bound(k: int, l: int) -> int:
    """h⁰(E(-k,-l)) 상한 = h⁰(O_X(-k,-l)) + h⁰(I_C(-k-2,-l+2))"""
    return h0_ox(-k, -l) + h0_ic(-k + DET_E[0], -l + DET_E[1])


def slope_gap(k: int, l: int, N) -> Fraction:
    """μ(O(k,l)) - μ(E) = 3(k(2N+1) + l(N²+2N)) - 3(N²-1)"""
    pol = Polarization(N)
    return slope(H2Class(k, l), 1, pol) - slope(C1_E, E_RANK, pol)


def classify(k: int, l: int, N, branch: str = "") -> Candidate:
    bound = section_upper_bound(k, l)
    gap = slope_gap(k, l, N)
    if bound == 0:
        status = EXCLUDED_NO_SECTIONS
    elif gap < 0:
        status = EXCLUDED_BY_DEGREE
    else:
        status = UNRESOLVED_LIFTING
    return Candidate(k, l, status, bound, gap, branch)


def search_box(N) -> Tuple[int, int]:
    """
    I_C 가지의 (a, b) 상자 상한

    불안정 조건 a(2N+1) + b(N²+2N) ≤ N² - 1 에서 a ≤ A_max, b ≤ B_max.
    한 칸씩 더 포함해 경계 바깥이 제외됨도 기록한다.
    """
    N = _as_fraction(N)
    budget = N * N - 1
    a_max = math.floor(budget / (2 * N + 1))
    b_max = math.floor(budget / (N * N + 2 * N))
    return a_max + 1, b_max + 1


def enumerate_candidates(N) -> List[Candidate]:
    """
    후보 O(k,l) 전체

    - O_X 가지 (k ≤ 0, l ≤ 0): N > 1 이면 기울기 차가 항상 음수; 모서리 {-1,0}² 만 대표로 기록
    - I_C 가지 (k = -a-2, l = 2-b, a, b ≥ 0): search_box 안을 정확히 분류

    Raises:
        PolarizationError: N ≤ 1
    """
    N = _as_fraction(N)
    if N <= 1:
        raise PolarizationError(N)

    found = {}
    for k in (-1, 0):
        for l in (-1, 0):
            found[(k, l)] = classify(k, l, N, "O_X")

    a_top, b_top = search_box(N)
    for a in range(a_top + 1):
        for b in range(b_top + 1):
            k, l = -a + DET_E[0], DET_E[1] - b
            if (k, l) not in found:
                found[(k, l)] = classify(k, l, N, "I_C")

    return [found[key] for key in sorted(found)]


def verdict(N) -> StabilityReport:
    """
    안정성 판정

    Returns:
        StabilityReport: STABLE 또는 CONDITIONALLY_STABLE (상한만으로는 UNSTABLE 을 내지 않음)

    Raises:
        PolarizationError: N ≤ 1
    """
    N = _as_fraction(N)
    candidates = enumerate_candidates(N)
    unresolved = [(c.k, c.l) for c in candidates if c.status == UNRESOLVED_LIFTING]
    notes = [PICARD_NOTE]
    if unresolved:
        result = CONDITIONALLY_STABLE
        notes.append(LIFTING_NOTE)
        log_step(f"⚠️ N = {N}: 미해결 후보 {unresolved}")
    else:
        result = STABLE
        log_step(f"✅ N = {N}: 모든 후보 제외")
    report = StabilityReport(N, candidates, result, unresolved, notes)
    snapshot_df(report.to_frame(), f"stability_{str(N).replace('/', '_')}")
    return report


def brute_force_scan(N, radius: int = 8) -> pd.DataFrame:
    """[-radius, radius]² 전수 분류 (상자 논리 교차 확인용)"""
    N = _as_fraction(N)
    rows = []
    for k in range(-radius, radius + 1):
        for l in range(-radius, radius + 1):
            c = classify(k, l, N)
            rows.append({
                "k": k, "l": l, "upper_bound": c.upper_bound,
                "slope_gap": c.slope_gap, "status": c.status,
            })
    df = pd.DataFrame(rows)
    log_shape(df, f"brute_force_N={N}")
    return df


def missed_candidates(report: StabilityReport, scan: pd.DataFrame) -> List[Tuple[int, int]]:
    """전수 조사에서 상한 > 0, 기울기 차 ≥ 0 인데 후보 목록에 없는 (k,l)"""
    listed = {(c.k, c.l) for c in report.candidates}
    risky = scan[(scan["upper_bound"] > 0) & (scan["slope_gap"] >= 0)]
    return [(int(r.k), int(r.l)) for r in risky.itertuples() if (int(r.k), int(r.l)) not in listed]


def degree_checks(samples: Iterable) -> pd.DataFrame:
    """
    표본 N 에서 deg E = 6(N²-1), deg E(2,-1) 양수 확인

    Returns:
        pd.DataFrame: N, deg_E, deg_E_poly_value, deg_twist, positive
    """
    twisted = C1_E + 2 * H2Class(2, -1)
    poly_E = degree_polynomial(C1_E)
    rows = []
    for N in samples:
        N = _as_fraction(N)
        pol = Polarization(N)
        deg_E = degree(C1_E, pol)
        deg_twist = degree(twisted, pol)
        poly_value = _as_fraction(poly_E.subs(N_SYMBOL, N))
        rows.append({
            "N": str(N), "deg_E": deg_E, "deg_E_matches_6(N^2-1)": deg_E == 6 * (N * N - 1),
            "deg_E_poly_value": poly_value, "deg_twist": deg_twist,
            "positive": deg_E > 0 and deg_twist > 0,
        })
    df = pd.DataFrame(rows)
    log_shape(df, "degree_checks")
    return df
