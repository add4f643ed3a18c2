"""
인증서 / 명령줄 모듈
"""
from .anchors import ANCHORS
from .certificate import (CheckRecord, Certificate, emit, input_digest, canonical,
                          PASS, FAIL, FLAGGED, SKIPPED)
from .checks import run_checks, resolve_command, GROUPS, COMMANDS, ALIASES
from .cli import run, build_parser

__all__ = [
    "ANCHORS", "CheckRecord", "Certificate", "emit", "input_digest", "canonical",
    "PASS", "FAIL", "FLAGGED", "SKIPPED", "run_checks", "resolve_command",
    "GROUPS", "COMMANDS", "ALIASES", "run", "build_parser",
]
