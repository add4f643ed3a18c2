"""
bundlecheck 메인 애플리케이션
"""
import os
import sys
from typing import List, Optional

# 프로젝트 루트 디렉터리를 Python 경로에 추가
sys.path.append(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.common.config import Config
from src.report.cli import EXIT_USAGE, run


def main(argv: Optional[List[str]] = None) -> int:
    """
    설정 검증 후 명령 실행

    Returns:
        int: 종료 코드 (0 / 1 / 2)
    """
    try:
        Config.validate_config()
    except ValueError as e:
        print(f"❌ 설정 오류: {e}", file=sys.stderr)
        return EXIT_USAGE
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
