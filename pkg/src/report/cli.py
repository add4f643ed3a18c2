"""
명령줄 진입점

    bundlecheck verify all|cohomology|lemma1|lemma2|chern|stability|geometry
        [--N <유리수>] [--p-file <경로>] [--format json|text] [--out <경로>]

종료 코드: 0 = 모두 PASS (FLAGGED 허용), 1 = FAIL 있음, 2 = 입력/사용법 오류
"""
import argparse
import sys
from pathlib import Path
from typing import List, Optional

from src import __version__
from src.common.config import Config
from src.common.trace import log_step
from src.construct.data import ConstructionData, load_perturbation
from src.report.certificate import Certificate, emit, input_digest
from src.report.checks import ALIASES, COMMANDS, resolve_command, run_checks
from src.stability.checker import parse_polarization

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bundlecheck", description="계수 2 다발 구성 검증 도구")
    parser.add_argument("--version", action="version", version=f"bundlecheck {__version__}")
    subparsers = parser.add_subparsers(dest="action", required=True)

    verify = subparsers.add_parser("verify", help="검사 실행 후 인증서 출력")
    verify.add_argument("target", choices=list(COMMANDS) + list(ALIASES))
    verify.add_argument("--N", dest="N", default=None, help="편극 Nω₁+ω₂ 의 N (유리수, N > 1)")
    verify.add_argument("--p-file", dest="p_file", default=None, help="섭동 p 파일 (다항식 텍스트 형식)")
    verify.add_argument("--format", dest="fmt", choices=Config.ALLOWED_FORMATS, default=None)
    verify.add_argument("--out", dest="out", default=None, help="인증서 저장 경로 (생략 시 표준 출력)")
    return parser


def _usage_error(message: str) -> int:
    print(f"❌ {message}", file=sys.stderr)
    return EXIT_USAGE


def run(argv: Optional[List[str]] = None) -> int:
    """
    명령 실행

    Returns:
        int: 종료 코드
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        command = resolve_command(args.target)
        N = None
        if args.N is not None:
            N = parse_polarization(args.N)
        elif command == "stability":
            return _usage_error("stability 명령에는 --N 이 필요합니다 (N>1 required)")
        p = load_perturbation(args.p_file) if args.p_file else None
        data = ConstructionData.with_perturbation(p)
    except (ValueError, OSError) as e:
        hint = " (N>1 required)" if "N > 1" in str(e) else ""
        return _usage_error(f"입력 오류{hint}: {e}")

    log_step(f"🔄 verify {command} 실행 중...")
    records = run_checks(command, data, N)

    cert = Certificate(__version__, input_digest(data.canonical_text()))
    cert.extend(records)
    output = emit(cert, args.fmt or Config.OUTPUT_FORMAT)

    if args.out:
        try:
            Path(args.out).write_text(output, encoding="utf-8")
        except OSError as e:
            return _usage_error(f"인증서를 저장할 수 없습니다: {e}")
        print(f"📁 인증서 저장: {args.out}", file=sys.stderr)
    else:
        sys.stdout.write(output)

    status = "✅" if cert.overall == "PASS" else "❌"
    print(f"{status} 전체 결과: {cert.overall} (검사 {len(records)}개)", file=sys.stderr)
    return cert.exit_code()
