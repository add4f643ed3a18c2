"""
공통 설정 모듈
"""
import os
import sys
from fractions import Fraction
from dotenv import load_dotenv

# 환경 변수 로드
load_dotenv("bundlecheck.env")


def _parse_samples(raw: str) -> tuple:
    """쉼표로 구분된 유리수 목록 파싱"""
    return tuple(Fraction(item.strip()) for item in raw.split(",") if item.strip())


class Config:
    """설정 클래스"""

    # 디버그 모드
    DEBUG = os.getenv("DEBUG", "False").lower() == "true"

    # 출력 설정
    OUTPUT_FORMAT = os.getenv("OUTPUT_FORMAT", "text").lower()
    ALLOWED_FORMATS = ("text", "json")

    # 무작위 검사 시드 (스모크 스크립트용)
    RANDOM_SEED = int(os.getenv("RANDOM_SEED", "20260101"))

    # 검사 범위
    BRUTE_FORCE_RADIUS = int(os.getenv("BRUTE_FORCE_RADIUS", "8"))
    COHOMOLOGY_RADIUS = int(os.getenv("COHOMOLOGY_RADIUS", "6"))
    STABILITY_SAMPLES = _parse_samples(os.getenv("STABILITY_SAMPLES", "3/2,2,5/2,3,10"))

    # 디버그 폴더
    DEBUG_FOLDER = "data/debug"

    @classmethod
    def ensure_debug_folder(cls):
        """디버그 폴더 생성"""
        if cls.DEBUG:
            os.makedirs(cls.DEBUG_FOLDER, exist_ok=True)
            print(f"✅ 디버그 폴더 생성: {cls.DEBUG_FOLDER}", file=sys.stderr)

    @classmethod
    def validate_config(cls):
        """
        설정 검증

        Raises:
            ValueError: 허용 범위를 벗어난 설정값
        """
        problems = []

        if cls.OUTPUT_FORMAT not in cls.ALLOWED_FORMATS:
            problems.append(f"OUTPUT_FORMAT={cls.OUTPUT_FORMAT}")
        if cls.BRUTE_FORCE_RADIUS <= 0:
            problems.append(f"BRUTE_FORCE_RADIUS={cls.BRUTE_FORCE_RADIUS}")
        if cls.COHOMOLOGY_RADIUS <= 0:
            problems.append(f"COHOMOLOGY_RADIUS={cls.COHOMOLOGY_RADIUS}")
        if not cls.STABILITY_SAMPLES or any(n <= 1 for n in cls.STABILITY_SAMPLES):
            problems.append("STABILITY_SAMPLES (모든 값이 1보다 커야 함)")

        if problems:
            print(f"⚠️ 잘못된 설정값: {', '.join(problems)}", file=sys.stderr)
            raise ValueError(f"다음 설정값이 올바르지 않습니다: {', '.join(problems)}")

        if cls.DEBUG:
            print("✅ 모든 설정값 검증 완료", file=sys.stderr)

        # 디버그 폴더 생성
        cls.ensure_debug_folder()
        return True
