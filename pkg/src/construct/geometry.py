"""
올(fibre) f = {x = u = v = 0} 근방의 기하 검사

- 기저 궤적: 선형계의 생성원이 f 에서만 공통으로 소멸함을 단항식 수준에서 확인
- 국소 매끄러움: u = v = 0 위에서 ∂F/∂u, ∂F/∂v 의 공통 영점이 X 위에 있지 않음
"""
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Tuple

from src.cohom.line_bundles import kunneth_p
from src.common.trace import log_step
from src.construct.data import U_EXPONENT, V_EXPONENT, X2Y_EXPONENT, ConstructionData
from src.poly.biform import FIRST_FACTOR, VARIABLES, BiForm, monomials
from src.poly.text_format import format_inline
from src.poly.zeros import common_zeros_p2

# p = 0 에서 알려진 유일한 공통 영점
UNPERTURBED_ZERO = (Fraction(1), Fraction(-1), Fraction(0))

UNPERTURBED_CAVEAT = (
    "p = 0: 전역 X 는 모든 항이 w² 로 나누어떨어져 기약이 아니다. "
    "검사한 것은 u = v = 0 위의 국소 명제뿐이다."
)


class SmoothnessError(ValueError):
    def __init__(self, point, value):
        self.point = point
        super().__init__(
            f"smoothness argument fails for this p: 공통 영점 {list(map(str, point))} 에서 F = {value}"
        )


@dataclass
class SubCheck:
    """검사 항목 하나의 결과"""
    name: str
    passed: bool
    detail: Dict[str, object] = field(default_factory=dict)


@dataclass
class GeometryCertificate:
    """기하 검사 결과 묶음 (항목 순서 고정)"""
    name: str
    checks: List[SubCheck] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, **detail) -> SubCheck:
        check = SubCheck(name, passed, detail)
        self.checks.append(check)
        return check


# ----------------------------------------------------------------------
# 기저 궤적
# ----------------------------------------------------------------------
def _exponent_add(*exponents) -> Tuple[int, ...]:
    return tuple(sum(parts) for parts in zip(*exponents))


def base_locus_generators(include_fibre_generators: bool = True) -> List[BiForm]:
    """
    u·m, v·m (m: 이중차수 (3,2)) 와 x²y·m' (m': 이중차수 (0,3))

    목록 순서대로 돌려주며 겹치는 곱(예: u·(v·…) 와 v·(u·…))도 그대로 둔다.
    """
    generators = []
    for m in monomials(3, 2):
        generators.append(BiForm.monomial(_exponent_add(U_EXPONENT, m)))
    for m in monomials(3, 2):
        generators.append(BiForm.monomial(_exponent_add(V_EXPONENT, m)))
    if include_fibre_generators:
        for m in monomials(0, 3):
            generators.append(BiForm.monomial(_exponent_add(X2Y_EXPONENT, m)))
    return generators


def _vanishes_on_fibre(generator: BiForm) -> bool:
    return any(generator.is_divisible_by_monomial(m) for m in (U_EXPONENT, V_EXPONENT, X2Y_EXPONENT))


def _patch_point(first: str, second: str) -> Tuple[int, ...]:
    return tuple(1 if name in (first, second) else 0 for name in VARIABLES)


def base_locus_check(include_fibre_generators: bool = True) -> GeometryCertificate:
    """
    선형계의 기저 궤적이 f 뿐임을 확인

    (i) 생성원 개수, (ii) f 위 소멸, (iii) u = v = 0, w = 1 위 공통 영점이 {x²y = 0},
    (iv) (u,v) ≠ (0,0) 인 좌표 패치마다 소멸하지 않는 증인 단항식.

    Args:
        include_fibre_generators: False 이면 x²y·m' 생성원을 빼고 실행 (음성 대조군)

    Returns:
        GeometryCertificate: 네 항목의 결과
    """
    cert = GeometryCertificate("base_locus")
    generators = base_locus_generators(include_fibre_generators)

    # (i)
    expected = 2 * kunneth_p(3, 2)[0] + (kunneth_p(0, 3)[0] if include_fibre_generators else 0)
    distinct = len(set(generators))
    cert.add("generator_count", len(generators) == expected,
             listed=len(generators), expected=expected, distinct=distinct)
    if distinct != len(generators):
        cert.notes.append(
            f"나열한 곱 {len(generators)}개 중 서로 다른 단항식은 {distinct}개 "
            "(uv 또는 x²y·u, x²y·v 로 나누어떨어지는 단항식이 겹침)"
        )

    # (ii)
    failing = [g for g in generators if not _vanishes_on_fibre(g)]
    cert.add("vanish_on_fibre", not failing, failing=len(failing))

    # (iii) u = v = 0, w = 1 에서 남는 것은 x²y 의 스칼라 배뿐이어야 한다
    x2y = BiForm.monomial(X2Y_EXPONENT)
    restricted = [g.substitute_fibre() for g in generators]
    surviving = [r for r in restricted if not r.is_zero()]
    only_x2y = bool(surviving) and all(
        len(r) == 1 and r.is_divisible_by_monomial(X2Y_EXPONENT) and r.bidegree == x2y.bidegree
        for r in surviving
    )
    locus = "{x²y = 0}" if only_x2y else ("P²₁ 전체" if not surviving else "기타")
    cert.add("fibre_locus", only_x2y, surviving=len(surviving), locus=locus)

    # (iv) x|y|z 패치 × u|v 패치, w 패치는 (u,v) ≠ (0,0) 이므로 u 또는 v 패치로 귀착
    generator_set = set(generators)
    patches = {}
    all_found = True
    for first in FIRST_FACTOR:
        for second in ("u", "v"):
            witness_exp = [0] * 6
            witness_exp[VARIABLES.index(first)] = 3
            witness_exp[VARIABLES.index(second)] = 3
            witness = BiForm.monomial(witness_exp)
            value = witness.evaluate(_patch_point(first, second))
            found = witness in generator_set and value != 0
            all_found &= found
            patches[f"{first}≠0,{second}≠0"] = f"{first}^3*{second}^3" if found else "없음"
        patches[f"{first}≠0,w≠0"] = f"({first},u) 또는 ({first},v) 패치로 귀착"
    cert.add("patch_witnesses", all_found, patches=patches)

    status = "✅" if cert.passed else "❌"
    log_step(f"{status} 기저 궤적 검사: 생성원 {len(generators)}개 (서로 다른 {distinct}개)")
    return cert


# ----------------------------------------------------------------------
# 국소 매끄러움
# ----------------------------------------------------------------------
def local_smoothness_check(data: ConstructionData) -> GeometryCertificate:
    """
    f 근방에서 X 의 매끄러움

    g_u = ∂F/∂u, g_v = ∂F/∂v 를 u = v = 0, w = 1 에서 계산해 공통 영점을 구하고
    각 영점에서 F 가 0 이 아님을 확인한다.

    Raises:
        SmoothnessError: 공통 영점이 X 위에 있을 때
        CommonFactorError: g_u, g_v 가 공통 인수를 가질 때
    """
    cert = GeometryCertificate("local_smoothness")
    g_u = data.F.partial("u").substitute_fibre()
    g_v = data.F.partial("v").substitute_fibre()
    f_fibre = data.F.substitute_fibre()

    try:
        zeros = common_zeros_p2(g_u, g_v)
    except ValueError as e:
        print(f"❌ 공통 영점 계산 실패: {e}", file=sys.stderr)
        raise

    values = {}
    for point in zeros.points:
        value = f_fibre.evaluate(point + (0, 0, 1))
        values[str(list(map(str, point)))] = str(value)
        if value == 0:
            print(f"❌ 공통 영점 {point} 이 X 위에 있음", file=sys.stderr)
            raise SmoothnessError(point, value)

    cert.add("off_hypersurface", not zeros.irrational_roots,
             g_u=format_inline(g_u), g_v=format_inline(g_v), common_zeros=values,
             resultant=zeros.resultant.to_text())
    cert.notes.extend(zeros.notes)
    if zeros.irrational_roots:
        cert.notes.append("무리수 공통 영점은 인증하지 않음")

    if data.is_unperturbed():
        cert.add("unperturbed_zero_set", zeros.points == (UNPERTURBED_ZERO,),
                 expected="[1:-1:0]", found=[list(map(str, p)) for p in zeros.points])
        cert.notes.append(UNPERTURBED_CAVEAT)

    status = "✅" if cert.passed else "❌"
    log_step(f"{status} 국소 매끄러움: 공통 영점 {len(zeros.points)}개")
    return cert
