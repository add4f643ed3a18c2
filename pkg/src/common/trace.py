"""
디버그 추적 모듈

상태 메시지는 모두 stderr로 출력한다. stdout은 인증서 전용이다.
"""
import os
import sys
import pandas as pd
from src.common.config import Config


def log_step(message: str):
    """DEBUG 모드일 때만 진행 상황 출력"""
    if Config.DEBUG:
        print(message, file=sys.stderr)


def log_warning(message: str):
    """경고는 DEBUG 여부와 관계없이 출력"""
    print(f"⚠️ {message}", file=sys.stderr)


def snapshot_df(df: pd.DataFrame, name: str):
    """
    DEBUG 모드일 때만 DataFrame을 CSV로 저장

    Args:
        df: 저장할 DataFrame
        name: 파일명 (확장자 제외)
    """
    if not Config.DEBUG:
        return

    if df is None or df.empty:
        print(f"⚠️ {name}: 빈 DataFrame, 저장 건너뛰기", file=sys.stderr)
        return

    try:
        Config.ensure_debug_folder()
        file_path = os.path.join(Config.DEBUG_FOLDER, f"{name}.csv")
        df.to_csv(file_path, index=False, encoding="utf-8")
        print(f"📁 {name} 저장: {file_path} ({df.shape})", file=sys.stderr)
    except Exception as e:
        print(f"❌ {name} 저장 실패: {e}", file=sys.stderr)


def log_shape(df: pd.DataFrame, name: str):
    """
    DataFrame의 shape와 columns를 출력 (DEBUG 모드 전용)

    Args:
        df: 로그할 DataFrame
        name: 식별자
    """
    if not Config.DEBUG:
        return

    if df is None:
        print(f"📊 {name}: None", file=sys.stderr)
        return

    if df.empty:
        print(f"📊 {name}: 빈 DataFrame", file=sys.stderr)
        return

    print(f"📊 {name}: {df.shape} - 컬럼: {list(df.columns)}", file=sys.stderr)
    print("   샘플 데이터 (상위 3행):", file=sys.stderr)
    print(df.head(3).to_string(), file=sys.stderr)
