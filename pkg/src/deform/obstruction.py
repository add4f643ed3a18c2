"""
C 의 1차 변형과 2차 장애

1차: 법다발 사상의 핵 분할형 (h⁰ = 변형 차원).
2차: x = ε·s 로 두꺼워진 곡선 위에서 단면 (s + εl, εa, εb) 의 짝짓기
    s·(2y+q)·s + a·e₂ + b·e₃ = 0
을 단항식 기저 (y³, y²z, yz², z³) 에서 비교한 4×2 연립방정식으로 판정한다.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import sympy as sp

from src.common.trace import log_step, log_warning
from src.construct.data import ConstructionData, normal_bundle_map
from src.p1split.splitting import (BundleMapP1, SplittingFitError, SplittingType,
                                   h0_of_splitting, splitting_type)
from src.poly.biform import _as_fraction
from src.poly.binform import (BinForm, DualBinForm, binform_gcd, restrict_to_C,
                              restrict_to_eps_curve)

MONOMIAL_BASIS = ("y^3", "y^2*z", "y*z^2", "z^3")
DIRECTION_VARIABLES = ("α", "β")

ALL_OBSTRUCTED = "all directions obstructed"
NOT_ALL_OBSTRUCTED = "not all directions obstructed"
INCONCLUSIVE = "inconclusive"

# C 근처에서 p 가 남기는 계수의 상한
SMALL_COEFFICIENT_BOUND = Fraction(1, 10)

SECTION_MODULE_NOTE = (
    "(ε·g₀, 0, 0) 형태의 단면은 모든 1차 형식 g₀ 에 대해 ε-사상의 핵에 들어가므로 "
    "H⁰(ν_{C_ε/X_ε}) 에 대한 강한 명제는 판정하지 않고 제한 사상의 상만 보고한다."
)

Y_FORM = BinForm([1, 0], 1)
Z_FORM = BinForm([0, 1], 1)


@dataclass(frozen=True)
class DeformationDirection:
    """s = αy + βz"""
    alpha: Fraction
    beta: Fraction

    def __post_init__(self):
        object.__setattr__(self, "alpha", _as_fraction(self.alpha))
        object.__setattr__(self, "beta", _as_fraction(self.beta))

    def is_zero(self) -> bool:
        return self.alpha == 0 and self.beta == 0

    def section(self) -> BinForm:
        return BinForm([self.alpha, self.beta], 1)

    def __str__(self) -> str:
        return f"({self.alpha}, {self.beta})"


@dataclass(frozen=True)
class FirstOrder:
    """1차 변형: 분할형, 차원, 기저 방향"""
    splitting: SplittingType
    dimension: int
    basis: Tuple[DeformationDirection, ...]


@dataclass(frozen=True)
class ObstructionSystem:
    """
    M·(a, b)ᵀ = rhs

    Attributes:
        matrix: 4×2, 열은 e₂ = z³ + ∂p/∂u|_C, e₃ = z²y + y³ + ∂p/∂v|_C 의 계수
        rhs_forms: 각 행의 우변 -(2y+q)s² 계수 ((α, β) 의 2차 형식)
        forcing_factor: 2y + q
        direction: 수치 방향 (기호 계산이면 None)
    """
    matrix: Tuple[Tuple[Fraction, Fraction], ...]
    rhs_forms: Tuple[BinForm, ...]
    forcing_factor: BinForm
    direction: Optional[DeformationDirection] = None
    basis: Tuple[str, ...] = MONOMIAL_BASIS

    @property
    def rhs(self) -> Tuple[Fraction, ...]:
        """수치 우변 (방향이 주어졌을 때만)"""
        if self.direction is None:
            raise ValueError("기호 연립방정식에는 수치 우변이 없습니다")
        return tuple(f.evaluate(self.direction.alpha, self.direction.beta) for f in self.rhs_forms)

    def sympy_matrix(self) -> sp.Matrix:
        return sp.Matrix([[_rational(c) for c in row] for row in self.matrix])

    def left_null_basis(self) -> List[Tuple[Fraction, ...]]:
        """wᵀM = 0 인 w 의 기저 (기약 행 사다리꼴로 정규화)"""
        vectors = self.sympy_matrix().T.nullspace()
        if not vectors:
            return []
        # 결과는 nullspace() 의 배율과 순서에 의존하지 않는다
        reduced, pivots = sp.Matrix.vstack(*[v.T for v in vectors]).rref()
        return [tuple(_as_fraction(c) for c in reduced.row(i)) for i in range(len(pivots))]

    def compatibility_forms(self) -> Tuple[BinForm, ...]:
        """wᵀ·rhs (선행 계수 1 로 정규화, 0 은 제외하지 않음)"""
        forms = []
        for w in self.left_null_basis():
            total = BinForm.zero(2, DIRECTION_VARIABLES)
            for weight, form in zip(w, self.rhs_forms):
                if weight:
                    total = total + form.scale(weight)
            forms.append(total if total.is_zero() else total.monic())
        return tuple(forms)

    def is_feasible(self) -> bool:
        """정확한 가우스 소거로 해 존재 여부"""
        augmented = self.sympy_matrix().row_join(sp.Matrix([_rational(c) for c in self.rhs]))
        return self.sympy_matrix().rank() == augmented.rank()


@dataclass(frozen=True)
class ModuliVerdict:
    """모듈라이 공간의 국소 구조 판정"""
    first_order_dimension: int
    compatibility_forms: Tuple[BinForm, ...]
    gcd: Optional[BinForm]
    status: str
    local_ring: Optional[str]
    notes: Tuple[str, ...] = field(default_factory=tuple)


@dataclass(frozen=True)
class RestrictionImage:
    """2차까지 올라가는 g₀ 의 공간"""
    dimension: int
    basis: Tuple[BinForm, ...]
    section_attained: bool


def _rational(value) -> sp.Rational:
    value = _as_fraction(value)
    return sp.Rational(value.numerator, value.denominator)


# ----------------------------------------------------------------------
# 1차
# ----------------------------------------------------------------------
def first_order_from_map(bundle_map: BundleMapP1) -> FirstOrder:
    """
    Raises:
        SplittingFitError: 영 사상 (분할형 맞춤의 전제가 깨짐)
    """
    if bundle_map.is_zero():
        raise SplittingFitError("법다발 사상이 0 입니다")
    splitting = splitting_type(bundle_map)
    dimension = h0_of_splitting(splitting)
    basis = (DeformationDirection(1, 0), DeformationDirection(0, 1))
    return FirstOrder(splitting, dimension, basis)


def first_order(data: ConstructionData) -> FirstOrder:
    return first_order_from_map(normal_bundle_map(data))


# ----------------------------------------------------------------------
# 2차
# ----------------------------------------------------------------------
def eps_normal_map(direction: DeformationDirection,
                   data: ConstructionData) -> Tuple[DualBinForm, DualBinForm, DualBinForm]:
    """
    x = ε·s, u = v = 0, w = 1 에서 (∂F/∂x, ∂F/∂u, ∂F/∂v)

    예) (1,0), p = 0 → (ε·2y², z³, z²y + y³ + ε·3y³)
    """
    s = direction.section()
    return tuple(restrict_to_eps_curve(data.F.partial(var), s) for var in ("x", "u", "v"))


def forcing_factor(data: ConstructionData) -> BinForm:
    """∂F/∂x 의 x-선형 부분 2y + q (u = v = 0, w = 1, x = 0)"""
    restricted = restrict_to_eps_curve(data.F.partial("x"), Y_FORM)
    return restricted.f1.exact_quotient(Y_FORM)


def perturbation_parts(data: ConstructionData) -> Dict[str, BinForm]:
    """
    C 근처에서 p 가 바꾸는 세 형식

    Returns:
        dict: q = (∂p/∂x)/x, ∂p/∂u|_C, ∂p/∂v|_C
    """
    p = data.p
    q = restrict_to_eps_curve(p.partial("x"), Y_FORM).f1.exact_quotient(Y_FORM)
    return {"q": q, "dp_du": restrict_to_C(p.partial("u")), "dp_dv": restrict_to_C(p.partial("v"))}


def max_perturbation_coefficient(data: ConstructionData) -> Fraction:
    """perturbation_parts 의 계수 절댓값 최댓값"""
    return max((abs(c) for form in perturbation_parts(data).values() for c in form.coeffs),
               default=Fraction(0))


def auxiliary_pairing(direction: DeformationDirection, data: ConstructionData,
                      l: BinForm) -> DualBinForm:
    """첫 성분에 ε·l 을 더했을 때 짝짓기의 변화 (ε² = 0 이므로 항상 0)"""
    e1 = eps_normal_map(direction, data)[0]
    return DualBinForm.eps(l) * e1


def second_order_system(data: ConstructionData,
                        direction: Optional[DeformationDirection] = None) -> ObstructionSystem:
    """
    2차 장애 연립방정식

    Args:
        data: 구성 데이터
        direction: 수치 방향 (생략하면 (α, β) 기호 우변)

    Returns:
        ObstructionSystem: 4×2 행렬과 우변
    """
    columns = (restrict_to_C(data.F.partial("u")), restrict_to_C(data.F.partial("v")))
    matrix = tuple((columns[0].coefficient(k), columns[1].coefficient(k)) for k in range(4))

    factor = forcing_factor(data)
    # s² = α²y² + 2αβ·yz + β²z²
    pieces = (factor * Y_FORM * Y_FORM, (factor * Y_FORM * Z_FORM).scale(2), factor * Z_FORM * Z_FORM)
    rhs_forms = tuple(
        BinForm([-piece.coefficient(k) for piece in pieces], 2, DIRECTION_VARIABLES)
        for k in range(4)
    )
    return ObstructionSystem(matrix, rhs_forms, factor, direction)


def obstructed(direction: DeformationDirection, data: ConstructionData) -> bool:
    """
    방향 s 가 2차에서 막히는지

    Raises:
        ValueError: 영 방향
    """
    if direction.is_zero():
        raise ValueError("zero direction: (α, β) ≠ (0, 0) 이어야 합니다")
    return not second_order_system(data, direction).is_feasible()


def local_ring_descriptor(k: int) -> str:
    """모든 2차 단항식으로 나눈 k 변수 국소환"""
    if k == 0:
        return "C"
    if k == 1:
        return "C[ε]/(ε²)"
    if k == 2:
        return "C[ε,η]/(ε²,εη,η²)"
    return f"C[e1..e{k}]/(all degree-2 monomials)"


def obstructed_all(data: ConstructionData) -> ModuliVerdict:
    """
    모든 0 아닌 방향이 막히는지 (양형식들의 gcd = 1 ⟺ 대수적 폐포에서도 공통 영점 없음)

    Returns:
        ModuliVerdict: 상태, gcd, 국소환 표기
    """
    first = first_order(data)
    system = second_order_system(data)
    forms = system.compatibility_forms()
    notes = [f"단항식 기저 순서: {', '.join(MONOMIAL_BASIS)}"]

    nonzero = [f for f in forms if not f.is_zero()]
    if not nonzero:
        log_warning("양립 조건이 모두 0: 판정 불가")
        return ModuliVerdict(first.dimension, forms, None, INCONCLUSIVE, None,
                             tuple(notes + ["compatibility forms all vanish"]))

    common = binform_gcd(nonzero)
    if common.degree == 0:
        status = ALL_OBSTRUCTED
        ring = local_ring_descriptor(first.dimension)
    else:
        status = NOT_ALL_OBSTRUCTED
        ring = None
        notes.append(f"gcd {common} 의 영점 방향은 2차까지 올라갈 수 있음")

    log_step(f"{'✅' if ring else '⚠️'} 2차 장애: {status} (gcd = {common})")
    return ModuliVerdict(first.dimension, forms, common, status, ring, tuple(notes))


def restriction_image(direction: DeformationDirection, data: ConstructionData) -> RestrictionImage:
    """
    s·(2y+q)·g₀ 가 e₂, e₃ 의 생성 공간에 들어가는 1차 형식 g₀ 의 공간

    Raises:
        ValueError: 영 방향
    """
    if direction.is_zero():
        raise ValueError("zero direction: (α, β) ≠ (0, 0) 이어야 합니다")
    system = second_order_system(data, direction)
    null_basis = system.left_null_basis()
    s_factor = direction.section() * system.forcing_factor

    images = [s_factor * Y_FORM, s_factor * Z_FORM]
    constraint = sp.Matrix([
        [sum((_rational(w[k]) * _rational(img.coefficient(k)) for k in range(4)), sp.Integer(0))
         for img in images]
        for w in null_basis
    ]) if null_basis else sp.zeros(0, 2)

    kernel = constraint.nullspace() if constraint.rows else [sp.Matrix([1, 0]), sp.Matrix([0, 1])]
    basis = tuple(BinForm([_as_fraction(v[0]), _as_fraction(v[1])], 1) for v in kernel)
    # s = αy + βz 가 제약의 핵에 있는지 직접 대입
    section = sp.Matrix([_rational(direction.alpha), _rational(direction.beta)])
    attained = all(entry == 0 for entry in constraint * section) if constraint.rows else True
    log_step(f"📊 제한 사상 상: 방향 {direction}, 차원 {len(basis)}, s 포함 = {attained}")
    log_step(f"⚠️ {SECTION_MODULE_NOTE}")
    return RestrictionImage(len(basis), basis, attained)


def sample_directions(rng, count: int, bound: int = 9) -> List[DeformationDirection]:
    """0 이 아닌 무작위 유리 방향 (속성 검사용)"""
    directions = []
    while len(directions) < count:
        a, b, c, d = (int(v) for v in rng.integers(-bound, bound + 1, size=4))
        if c == 0 or d == 0:
            continue
        direction = DeformationDirection(Fraction(a, c), Fraction(b, d))
        if not direction.is_zero():
            directions.append(direction)
    return directions
