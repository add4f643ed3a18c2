"""
선다발 코호몰로지 모듈

- P² : Bott 공식
- P = P²×P² : Künneth 공식
- X ⊂ P ((3,3) 초곡면) : 인자 완전열 0→O_P(a-3,b-3)→O_P(a,b)→O_X(a,b)→0 의 LES
- C ≅ P¹ : O_X(a,b)|_C ≅ O_{P¹}(a)
"""
from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional, Tuple

import pandas as pd
import sympy as sp
from sympy.polys.matrices import DomainMatrix

from src.common.trace import log_shape, snapshot_df
from src.cohom.exact_seq import ExactSeq, les_propagate
from src.poly.biform import monomials

SPACE_DIMENSIONS = {"P2": 2, "P": 4, "X": 3, "C": 1}


@dataclass(frozen=True)
class LineBundle:
    """O(a,b) (space: 'P' 또는 'X')"""
    space: str
    a: int
    b: int

    def dual(self) -> "LineBundle":
        return LineBundle(self.space, -self.a, -self.b)

    def __str__(self) -> str:
        return f"O_{self.space}({self.a},{self.b})"


@dataclass(frozen=True)
class CohTable:
    """h^0..h^n (None = unknown)"""
    space: str
    dims: Tuple[Optional[int], ...]

    def __post_init__(self):
        expected = SPACE_DIMENSIONS[self.space] + 1
        if len(self.dims) != expected:
            raise ValueError(f"{self.space} 코호몰로지 표 길이는 {expected}이어야 합니다: {self.dims}")
        if any(d is not None and d < 0 for d in self.dims):
            raise ValueError(f"음수 차원: {self.dims}")

    def __getitem__(self, i: int) -> Optional[int]:
        return self.dims[i]

    def is_determined(self) -> bool:
        return all(d is not None for d in self.dims)

    def euler_characteristic(self) -> Optional[int]:
        if not self.is_determined():
            return None
        return sum((-1) ** i * d for i, d in enumerate(self.dims))

    def as_list(self) -> list:
        return ["unknown" if d is None else d for d in self.dims]


# ----------------------------------------------------------------------
# P², P¹, P
# ----------------------------------------------------------------------
@lru_cache(maxsize=None)
def bott_p2(d: int, i: int) -> int:
    """
    h^i(P², O(d))

    Args:
        d: 차수
        i: 0, 1, 2

    Returns:
        int: 차원
    """
    if i == 0:
        return comb(d + 2, 2) if d >= 0 else 0
    if i == 1:
        return 0
    if i == 2:
        return comb(-d - 1, 2) if d <= -3 else 0
    raise ValueError(f"P²의 코호몰로지 차수는 0..2: {i}")


@lru_cache(maxsize=None)
def bott_p1(d: int, i: int) -> int:
    """h^i(P¹, O(d))"""
    if i == 0:
        return d + 1 if d >= 0 else 0
    if i == 1:
        return -d - 1 if d <= -2 else 0
    raise ValueError(f"P¹의 코호몰로지 차수는 0..1: {i}")


@lru_cache(maxsize=None)
def kunneth_p(a: int, b: int) -> CohTable:
    """h^q(P, O(a,b)) = Σ_{i+j=q} h^i(O(a))·h^j(O(b))"""
    dims = []
    for q in range(5):
        dims.append(sum(bott_p2(a, i) * bott_p2(b, q - i) for i in range(3) if 0 <= q - i <= 2))
    return CohTable("P", tuple(dims))


def restrict_to_curve(a: int, b: int) -> CohTable:
    """O_X(a,b)|_C ≅ O_{P¹}(a) (C는 P²₁ 안의 직선, P²₂ 방향으로는 한 점)"""
    return CohTable("C", (bott_p1(a, 0), bott_p1(a, 1)))


# ----------------------------------------------------------------------
# X
# ----------------------------------------------------------------------
def divisor_sequence(a: int, b: int) -> ExactSeq:
    """0→O_P(a-3,b-3)→O_P(a,b)→O_X(a,b)→0 의 LES (X 항은 미지)"""
    kernel = kunneth_p(a - 3, b - 3)
    ambient = kunneth_p(a, b)
    entries = []
    for i in range(5):
        entries.append((f"H{i}(O_P({a - 3},{b - 3}))", kernel[i]))
        entries.append((f"H{i}(O_P({a},{b}))", ambient[i]))
        entries.append((f"H{i}(O_X({a},{b}))", None if i < 4 else 0))
    return ExactSeq.of(*entries)


@lru_cache(maxsize=None)
def hypersurface_coh(a: int, b: int) -> CohTable:
    """
    h^i(O_X(a,b)) (LES가 강제하는 값만, 나머지는 unknown)

    Raises:
        InconsistentSequenceError: Künneth 입력이 모순일 때 (발생하면 버그)
    """
    solved = les_propagate(divisor_sequence(a, b))
    dims = tuple(solved.terms[3 * i + 2].dim for i in range(4))
    return CohTable("X", dims)


@lru_cache(maxsize=None)
def h0_ox(a: int, b: int) -> int:
    """
    h^0(O_X(a,b)) = h^0(O_P(a,b)) - h^0(O_P(a-3,b-3))

    F 곱셈은 H^0에서 단사이고 h^1(O_P(a-3,b-3)) = 0 이므로 성립한다.
    """
    kernel = kunneth_p(a - 3, b - 3)
    if kernel[1] != 0:
        raise ValueError(f"h^1(O_P({a - 3},{b - 3})) = {kernel[1]} ≠ 0: h0_ox 공식 전제 위반")
    return kunneth_p(a, b)[0] - kernel[0]


def curve_restriction_matrix(a: int, b: int) -> DomainMatrix:
    """
    H^0(O_P(a,b)) → H^0(O_{P¹}(a)) 제한 사상 (x,u,v ↦ 0, w ↦ 1)

    행: y^{a-k} z^k (k = 0..a), 열: 이중차수 (a,b) 단항식
    """
    columns = monomials(a, b)
    rows = [[sp.QQ(0)] * len(columns) for _ in range(a + 1)]
    for col, (i, j, k, p, q, r) in enumerate(columns):
        if i == 0 and p == 0 and q == 0:
            rows[k][col] = sp.QQ(1)
    return DomainMatrix(rows, (a + 1, len(columns)), sp.QQ)


@lru_cache(maxsize=None)
def h0_ic(a: int, b: int) -> int:
    """
    h^0(I_C(a,b)): 곡선 C에서 소멸하는 O_X(a,b)의 단면 차원

    제한 사상의 핵 차원(정확한 선형대수)에서 F·H^0(O_P(a-3,b-3))를 뺀다.
    """
    if a < 0 or b < 0:
        return 0
    matrix = curve_restriction_matrix(a, b)
    kernel_dim = matrix.shape[1] - matrix.rank()
    return kernel_dim - kunneth_p(a - 3, b - 3)[0]


def curve_sequence(a: int, b: int, label: str = "I_C") -> ExactSeq:
    """0→I_C(a,b)→O_X(a,b)→O_C(a)→0 의 LES (h^0(I_C)는 h0_ic로 채움)"""
    ox = hypersurface_coh(a, b)
    oc = restrict_to_curve(a, b)
    entries = []
    for i in range(4):
        ideal = h0_ic(a, b) if i == 0 else None
        entries.append((f"H{i}({label}({a},{b}))", ideal))
        entries.append((f"H{i}(O_X({a},{b}))", ox[i]))
        entries.append((f"H{i}(O_C({a}))", oc[i] if i < 2 else 0))
    return ExactSeq.of(*entries)


@lru_cache(maxsize=None)
def ideal_sheaf_coh(a: int, b: int) -> CohTable:
    """h^i(I_C(a,b)) (강제되는 값만)"""
    solved = les_propagate(curve_sequence(a, b))
    return CohTable("X", tuple(solved.terms[3 * i].dim for i in range(4)))


def cohomology_sweep(radius: int) -> pd.DataFrame:
    """
    |a|, |b| ≤ radius 범위의 h^i(O_X(a,b)) 표

    Returns:
        pd.DataFrame: a, b, h0..h3 (미지는 None), determined, chi
    """
    rows = []
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            table = hypersurface_coh(a, b)
            rows.append({
                "a": a, "b": b,
                "h0": table[0], "h1": table[1], "h2": table[2], "h3": table[3],
                "determined": table.is_determined(),
                "chi": table.euler_characteristic(),
            })
    df = pd.DataFrame(rows)
    log_shape(df, "cohomology_sweep")
    snapshot_df(df, "cohomology_sweep")
    return df


def ambient_euler_characteristic(a: int, b: int) -> int:
    """χ(O_P(a,b)) - χ(O_P(a-3,b-3))"""
    def chi(table: CohTable) -> int:
        return sum((-1) ** i * d for i, d in enumerate(table.dims))
    return chi(kunneth_p(a, b)) - chi(kunneth_p(a - 3, b - 3))
