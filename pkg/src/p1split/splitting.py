"""
P¹ 위 다발 사상 ⊕ O(a_i) → O(d) 의 핵 분할형 계산

각 차수 t에서 핵의 차원(힐베르트 함수)을 정확한 유리수 선형대수로 재고,
h(t) = Σ max(0, b_j + t + 1) 의 1차 차분 #{b_j ≥ -t} 에서 b_j를 벗겨 낸다.
"""
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Tuple

import sympy as sp
from sympy.polys.matrices import DomainMatrix

from src.common.trace import log_step
from src.poly.binform import BinForm, binform_gcd

# 맞춤 검증에 추가로 쓰는 차수 개수
EXTRA_CHECKS = 2


class SplittingFitError(ValueError):
    """측정한 힐베르트 함수와 맞는 분할형이 없음 (P¹ 위에서는 버그를 뜻함)"""

    def __init__(self, detail: str):
        super().__init__(f"fit failure: {detail}")


@dataclass(frozen=True)
class BundleMapP1:
    """⊕_i O(a_i) → O(d), 성분 f_i 는 차수 d - a_i 의 이원 형식 (또는 0)"""
    source_degrees: Tuple[int, ...]
    target_degree: int
    entries: Tuple[BinForm, ...]

    def __post_init__(self):
        object.__setattr__(self, "source_degrees", tuple(int(a) for a in self.source_degrees))
        object.__setattr__(self, "entries", tuple(self.entries))
        if len(self.entries) != len(self.source_degrees):
            raise ValueError(
                f"성분 개수 {len(self.entries)}와 원천 차수 개수 {len(self.source_degrees)}가 다릅니다"
            )
        for a, f in zip(self.source_degrees, self.entries):
            if not f.is_zero() and f.degree != self.target_degree - a:
                raise ValueError(
                    f"성분 {f}의 차수 {f.degree} ≠ d - a = {self.target_degree - a}"
                )

    @property
    def rank(self) -> int:
        return len(self.source_degrees)

    def is_zero(self) -> bool:
        return all(f.is_zero() for f in self.entries)

    def gcd_degree(self) -> int:
        """0이 아닌 성분들의 gcd 차수 (영 사상이면 ValueError)"""
        return binform_gcd(self.entries).degree

    def coefficient_matrix(self, t: int) -> DomainMatrix:
        """
        차수 t 에서의 계수 행렬

        열: 각 i 에 대해 g_i = y^{a_i+t-k} z^k, 행: 차수 d+t 단항식 y^{d+t-m} z^m
        """
        rows = max(self.target_degree + t + 1, 0)
        columns: List[List] = []
        for a, f in zip(self.source_degrees, self.entries):
            g_degree = a + t
            for k in range(g_degree + 1):
                column = [sp.QQ(0)] * rows
                if not f.is_zero():
                    for j, c in enumerate(f.coeffs):
                        if c:
                            column[j + k] += sp.QQ(c.numerator, c.denominator)
                columns.append(column)
        if not columns or rows == 0:
            return DomainMatrix.zeros((rows, len(columns)), sp.QQ)
        data = [[columns[c][r] for c in range(len(columns))] for r in range(rows)]
        return DomainMatrix(data, (rows, len(columns)), sp.QQ)


@dataclass(frozen=True)
class SplittingType:
    """분할형 {b_j} (내림차순 정렬)"""
    degrees: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted((int(b) for b in self.degrees), reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def hilbert(self, t: int) -> int:
        return sum(max(0, b + t + 1) for b in self.degrees)

    def first_chern(self) -> int:
        return sum(self.degrees)

    def __str__(self) -> str:
        return "{" + ", ".join(str(b) for b in self.degrees) + "}"


def kernel_hilbert(bundle_map: BundleMapP1, t: int) -> int:
    """
    차수 t 에서 핵의 차원

    Args:
        bundle_map: 다발 사상
        t: 꼬임 차수

    Returns:
        int: {(g_i) : deg g_i = a_i + t, Σ f_i g_i = 0} 의 ℚ-차원
    """
    return _kernel_hilbert(bundle_map, int(t))


@lru_cache(maxsize=4096)
def _kernel_hilbert(bundle_map: BundleMapP1, t: int) -> int:
    matrix = bundle_map.coefficient_matrix(t)
    rows, cols = matrix.shape
    if cols == 0:
        return 0
    if rows == 0:
        return cols
    return cols - matrix.rank()


def _window(bundle_map: BundleMapP1) -> Tuple[int, int]:
    """
    힐베르트 함수 표본 구간 [t_min, t_top]

    b_j ≤ max a_i 이므로 h(t_min) = 0. Σ b_j ≥ Σ a_i - d 에서
    b_j ≥ (Σ a_i - d) - (r-1)·max a_i 이므로 t_top 에서는 모든 항이 기여한다.
    """
    sources = bundle_map.source_degrees
    top = max(sources)
    t_min = -top - 1
    rank = len(sources) - 1
    lower = (sum(sources) - bundle_map.target_degree) - (rank - 1) * top
    span = max(max(abs(a) for a in sources) + abs(bundle_map.target_degree) + 2, -lower - t_min)
    return t_min, t_min + span


def splitting_type(bundle_map: BundleMapP1) -> SplittingType:
    """
    핵 다발의 분할형 추론

    Args:
        bundle_map: 다발 사상

    Returns:
        SplittingType: 핵의 분할형 (영 사상이면 원천 차수 그대로)

    Raises:
        SplittingFitError: 측정값과 맞는 분할형이 없을 때
    """
    if bundle_map.is_zero():
        log_step("⚠️ 영 사상: 핵은 원천 다발 전체")
        return SplittingType(bundle_map.source_degrees)

    rank = bundle_map.rank - 1
    t_min, t_top = _window(bundle_map)
    measured = {t: kernel_hilbert(bundle_map, t) for t in range(t_min, t_top + 1)}
    if measured[t_min] != 0:
        raise SplittingFitError(f"h({t_min}) = {measured[t_min]} ≠ 0")

    # 차분 c(t) = #{b_j ≥ -t}; 새로 늘어난 개수만큼 b = -t 를 벗겨 낸다
    degrees: List[int] = []
    previous = 0
    for t in range(t_min + 1, t_top + 1):
        count = measured[t] - measured[t - 1]
        if count < previous:
            raise SplittingFitError(f"차분이 감소함: t = {t}, {previous} → {count}")
        degrees.extend([-t] * (count - previous))
        previous = count

    if len(degrees) != rank:
        raise SplittingFitError(f"계수 {len(degrees)} ≠ 기대 계수 {rank}")

    result = SplittingType(tuple(degrees))
    for t in range(t_min, t_top + EXTRA_CHECKS + 1):
        expected = measured[t] if t in measured else kernel_hilbert(bundle_map, t)
        if result.hilbert(t) != expected:
            raise SplittingFitError(f"h({t}) 예측 {result.hilbert(t)} ≠ 측정 {expected}")

    log_step(f"✅ 분할형 {result} (구간 t ∈ [{t_min}, {t_top}])")
    return result


def h0_of_splitting(splitting: SplittingType) -> int:
    """h^0 = Σ max(0, b_j + 1)"""
    return splitting.hilbert(0)


def random_bundle_map(rng, n: Optional[int] = None, bound: int = 5,
                      coefficient_range: int = 3) -> BundleMapP1:
    """
    무작위 다발 사상 (속성 검사 / 스모크 실행용)

    Args:
        rng: numpy Generator (np.random.default_rng)
        n: 원천 항 개수 (생략 시 1..4)
        bound: |a_i|, |d| 상한
        coefficient_range: 정수 계수 범위 [-c, c]
    """
    if n is None:
        n = int(rng.integers(1, 5))
    d = int(rng.integers(-bound, bound + 1))
    sources = []
    entries = []
    for _ in range(n):
        a = int(rng.integers(-bound, bound + 1))
        sources.append(a)
        degree = d - a
        if degree < 0:
            entries.append(BinForm.zero(0))
            continue
        coeffs = [int(c) for c in rng.integers(-coefficient_range, coefficient_range + 1, size=degree + 1)]
        entries.append(BinForm(coeffs, degree))
    return BundleMapP1(tuple(sources), d, tuple(entries))

