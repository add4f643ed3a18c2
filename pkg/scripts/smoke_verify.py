"""
스모크 테스트 스크립트 - 검증 명령 전체 점검
"""
import os
import sys
from fractions import Fraction

import numpy as np
from dotenv import load_dotenv

# 환경 변수 로드
load_dotenv("bundlecheck.env")

# 프로젝트 루트를 Python 경로에 추가
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


def test_cohomology():
    """코호몰로지 추적 테스트"""
    print("=== 코호몰로지 추적 테스트 ===")
    try:
        from src.cohom import end_deformation_dims, hypersurface_coh

        table = hypersurface_coh(-2, 2)
        print(f"✅ h*(O_X(-2,2)): {table.as_list()}")

        result = end_deformation_dims()
        print(f"✅ h¹(End E) = {result.h1_end} (단언 {len(result.assertions)}개)")
        if result.h1_end != 2:
            print(f"❌ h¹(End E) 기대값 2, 실제 {result.h1_end}")
            return False
        return True

    except Exception as e:
        print(f"❌ 코호몰로지 오류: {e}")
        return False


def test_normal_bundle():
    """법다발 분할형 테스트 (무작위 사상 포함)"""
    print("=== 법다발 분할형 테스트 ===")
    try:
        from src.construct import ConstructionData, normal_bundle_map
        from src.p1split import random_bundle_map, splitting_type

        result = splitting_type(normal_bundle_map(ConstructionData.default()))
        print(f"✅ ν_C/X 분할형: {result}")
        if result.degrees != (1, -3):
            return False

        rng = np.random.default_rng(int(os.getenv("RANDOM_SEED", "20260101")))
        for _ in range(20):
            bundle_map = random_bundle_map(rng)
            if bundle_map.is_zero():
                continue
            fitted = splitting_type(bundle_map)
            # 상은 O(d - deg gcd)
            expected = sum(bundle_map.source_degrees) - bundle_map.target_degree + bundle_map.gcd_degree()
            if fitted.first_chern() != expected:
                print(f"❌ c₁ 불일치: {fitted} vs {expected}")
                return False
        print("✅ 무작위 사상 20개 분할형 맞춤 통과")
        return True

    except Exception as e:
        print(f"❌ 법다발 오류: {e}")
        return False


def test_obstruction():
    """2차 장애 테스트"""
    print("=== 2차 장애 테스트 ===")
    try:
        from src.construct import ConstructionData
        from src.deform import ALL_OBSTRUCTED, obstructed_all

        verdict = obstructed_all(ConstructionData.default())
        print(f"✅ 판정: {verdict.status}, 국소환 {verdict.local_ring}")
        return verdict.status == ALL_OBSTRUCTED

    except Exception as e:
        print(f"❌ 2차 장애 오류: {e}")
        return False


def test_stability():
    """안정성 판정 테스트"""
    print("=== 안정성 판정 테스트 ===")
    try:
        from src.stability import verdict

        for N in (Fraction(3, 2), Fraction(2), Fraction(3)):
            report = verdict(N)
            print(f"✅ N = {N}: {report.verdict_text()}")
        return True

    except Exception as e:
        print(f"❌ 안정성 오류: {e}")
        return False


def test_certificate():
    """인증서 결정성 테스트"""
    print("=== 인증서 결정성 테스트 ===")
    try:
        from src.construct import ConstructionData
        from src.report import Certificate, emit, input_digest, run_checks

        data = ConstructionData.default()
        outputs = []
        for _ in range(2):
            cert = Certificate("smoke", input_digest(data.canonical_text()))
            cert.extend(run_checks("lemma1", data))
            outputs.append(emit(cert, "json"))

        if outputs[0] != outputs[1]:
            print("❌ 같은 입력에서 인증서가 다름")
            return False
        print(f"✅ JSON 인증서 {len(outputs[0])}바이트, 재실행 동일")
        return True

    except Exception as e:
        print(f"❌ 인증서 오류: {e}")
        return False


def main():
    """메인 테스트 실행"""
    print("🚀 bundlecheck 스모크 테스트 시작")
    print("=" * 50)

    tests = [
        ("코호몰로지", test_cohomology),
        ("법다발", test_normal_bundle),
        ("2차 장애", test_obstruction),
        ("안정성", test_stability),
        ("인증서", test_certificate),
    ]

    results = []

    for test_name, test_func in tests:
        print(f"\n📋 {test_name} 테스트 중...")
        try:
            success = test_func()
            results.append((test_name, success))
            if success:
                print(f"✅ {test_name} 테스트 통과")
            else:
                print(f"❌ {test_name} 테스트 실패")
        except Exception as e:
            print(f"❌ {test_name} 테스트 오류: {e}")
            results.append((test_name, False))

    print("\n" + "=" * 50)
    print("📊 테스트 결과 요약")
    print("=" * 50)

    passed = 0
    for test_name, success in results:
        status = "✅ 통과" if success else "❌ 실패"
        print(f"{test_name}: {status}")
        if success:
            passed += 1

    print(f"\n총 {len(results)}개 테스트 중 {passed}개 통과")

    if passed == len(results):
        print("🎉 모든 테스트 통과!")
        return True
    else:
        print("⚠️ 일부 테스트 실패")
        return False


if __name__ == "__main__":
    success = main()
    sys.exit(0 if success else 1)
