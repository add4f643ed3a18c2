"""
검증 인증서 (JSON / 텍스트 출력)

같은 입력이면 바이트 단위로 같은 출력이 나와야 하므로 키는 정렬하고
수는 정수든 유리수든 모두 'n' 또는 'n/d' 문자열로 적는다.
"""
import hashlib
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List

import sympy as sp

from src.poly.biform import BiForm
from src.poly.text_format import format_inline
from src.report.anchors import ANCHORS

PASS = "PASS"
FAIL = "FAIL"
FLAGGED = "FLAGGED"
SKIPPED = "SKIPPED"
STATUSES = (PASS, FAIL, FLAGGED, SKIPPED)


def canonical(value):
    """출력용 정규 값 (int, Fraction → 'n' / 'n/d', 튜플 → 리스트, 기호식 → 문자열)"""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    if isinstance(value, sp.Basic):
        return str(value)
    if isinstance(value, dict):
        return {str(k): canonical(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [canonical(v) for v in value]
    if isinstance(value, BiForm):
        return format_inline(value)
    if hasattr(value, "to_text"):
        return value.to_text()
    if hasattr(value, "item"):
        # numpy / pandas 스칼라
        return canonical(value.item())
    return str(value)


@dataclass
class CheckRecord:
    """검사 하나의 기록"""
    id: str
    anchor: str
    status: str
    inputs: Dict[str, object] = field(default_factory=dict)
    outputs: Dict[str, object] = field(default_factory=dict)
    assertions: List[str] = field(default_factory=list)

    def __post_init__(self):
        if self.anchor not in ANCHORS:
            raise ValueError(f"알 수 없는 anchor: {self.anchor}")
        if self.status not in STATUSES:
            raise ValueError(f"알 수 없는 상태: {self.status}")

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "status": self.status,
            "inputs": canonical(self.inputs),
            "outputs": canonical(self.outputs),
            "assertions": [str(a) for a in self.assertions],
        }


@dataclass
class Certificate:
    version: str
    input_digest: str
    checks: List[CheckRecord] = field(default_factory=list)

    def add(self, record: CheckRecord) -> CheckRecord:
        if any(r.id == record.id for r in self.checks):
            raise ValueError(f"중복 검사 id: {record.id}")
        self.checks.append(record)
        return record

    def extend(self, records) -> None:
        for record in records:
            self.add(record)

    def ordered(self) -> List[CheckRecord]:
        return sorted(self.checks, key=lambda r: r.id)

    @property
    def overall(self) -> str:
        return FAIL if any(r.status == FAIL for r in self.checks) else PASS

    def exit_code(self) -> int:
        return 0 if self.overall == PASS else 1

    def to_dict(self) -> dict:
        return {
            "version": self.version,
            "input_digest": self.input_digest,
            "checks": [r.to_dict() for r in self.ordered()],
            "overall": self.overall,
        }


def input_digest(canonical_text: str) -> str:
    """F, p 정규 텍스트의 SHA-256"""
    return hashlib.sha256(canonical_text.encode("utf-8")).hexdigest()


def _emit_json(cert: Certificate) -> str:
    return json.dumps(cert.to_dict(), sort_keys=True, ensure_ascii=False, indent=2) + "\n"


def _detail_lines(record: dict) -> List[str]:
    lines = []
    for key in sorted(record["outputs"]):
        lines.append(f"    {key}: {json.dumps(record['outputs'][key], sort_keys=True, ensure_ascii=False)}")
    for entry in record["assertions"]:
        lines.append(f"    - {entry}")
    return lines


def _emit_text(cert: Certificate) -> str:
    data = cert.to_dict()
    lines = [f"bundlecheck {data['version']}", f"input digest: {data['input_digest']}"]
    for record in data["checks"]:
        lines.append(f"[{record['status']}] {record['id']}: {record['anchor']}")
        if record["status"] in (FAIL, FLAGGED):
            lines.extend(_detail_lines(record))
    lines.append(f"overall: {data['overall']}")
    return "\n".join(lines) + "\n"


def emit(cert: Certificate, fmt: str = "text") -> str:
    """
    인증서를 문자열로

    Args:
        cert: 인증서
        fmt: 'json' 또는 'text'
    """
    if fmt == "json":
        return _emit_json(cert)
    if fmt == "text":
        return _emit_text(cert)
    raise ValueError(f"지원하지 않는 형식: {fmt}")
