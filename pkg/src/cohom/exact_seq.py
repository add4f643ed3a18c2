"""
긴 완전열(LES) 차원 전파 엔진

완전성은 dim T_i = r_{i-1} + r_i (r_i = rank(T_i → T_{i+1})) 로 모델링하고
정수 구간 전파로 미지 차원을 채운다. 구간이 한 점일 때만 값을 확정한다.
"""
from dataclasses import dataclass, field, replace
from typing import List, Optional, Sequence, Tuple

from src.common.trace import log_step

INJECTIVE = "injective"
SURJECTIVE = "surjective"
ZERO = "zero"


class InconsistentSequenceError(ValueError):
    """구간 제약이 공집합"""

    def __init__(self, detail: str):
        super().__init__(f"inconsistent input dimensions: {detail}")


@dataclass(frozen=True)
class SeqTerm:
    label: str
    dim: Optional[int] = None


@dataclass(frozen=True)
class Assertion:
    """사람이 주입한 사실 (인증서에 그대로 기록)"""
    kind: str            # "rank" 또는 "dim"
    index: int           # rank: T_index -> T_{index+1} 사상, dim: 항 번호
    value: object        # 정수 또는 ZERO / INJECTIVE / SURJECTIVE
    statement: str
    justification: str

    def describe(self) -> str:
        return f"{self.statement} (justification: {self.justification})"


@dataclass(frozen=True)
class ExactSeq:
    """양 끝이 0으로 둘러싸인 완전열"""
    terms: Tuple[SeqTerm, ...]
    assertions: Tuple[Assertion, ...] = ()
    ranks: Tuple[Optional[int], ...] = ()
    log: Tuple[str, ...] = field(default_factory=tuple)

    @classmethod
    def of(cls, *terms: Tuple[str, Optional[int]]) -> "ExactSeq":
        return cls(tuple(SeqTerm(label, dim) for label, dim in terms))

    def assert_rank(self, index: int, value, statement: str, justification: str) -> "ExactSeq":
        self._check_map_index(index)
        fact = Assertion("rank", index, value, statement, justification)
        return replace(self, assertions=self.assertions + (fact,))

    def assert_dim(self, index: int, value: int, statement: str, justification: str) -> "ExactSeq":
        if not 0 <= index < len(self.terms):
            raise IndexError(f"항 번호 범위 밖: {index}")
        fact = Assertion("dim", index, int(value), statement, justification)
        return replace(self, assertions=self.assertions + (fact,))

    def _check_map_index(self, index: int):
        if not 0 <= index < len(self.terms) - 1:
            raise IndexError(f"사상 번호 범위 밖: {index}")

    def dim(self, label: str) -> Optional[int]:
        for term in self.terms:
            if term.label == label:
                return term.dim
        raise KeyError(label)

    def dims(self) -> List[Optional[int]]:
        return [t.dim for t in self.terms]

    def render(self) -> str:
        """'0 → A(1) → B(?) → 0' 형태"""
        body = " → ".join(f"{t.label}({'?' if t.dim is None else t.dim})" for t in self.terms)
        return f"0 → {body} → 0"


class _Interval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo: int = 0, hi: Optional[int] = None):
        self.lo = lo
        self.hi = hi

    def fixed(self) -> Optional[int]:
        return self.lo if self.hi is not None and self.lo == self.hi else None

    def tighten(self, lo: Optional[int] = None, hi: Optional[int] = None) -> bool:
        changed = False
        if lo is not None and lo > self.lo:
            self.lo = lo
            changed = True
        if hi is not None and (self.hi is None or hi < self.hi):
            self.hi = hi
            changed = True
        return changed

    def empty(self) -> bool:
        return self.hi is not None and self.lo > self.hi


def _add_hi(a: Optional[int], b: Optional[int]) -> Optional[int]:
    return None if a is None or b is None else a + b


def les_propagate(seq: ExactSeq, max_rounds: int = 1000) -> ExactSeq:
    """
    완전성 제약으로 미지 차원 채우기

    Args:
        seq: 완전하다고 가정한 열 (단언 사실 포함 가능)
        max_rounds: 전파 반복 상한

    Returns:
        ExactSeq: 강제되는 값이 채워진 새 열 (ranks, log 포함)

    Raises:
        InconsistentSequenceError: 제약을 만족하는 정수해가 없을 때
    """
    n = len(seq.terms)
    dims = [_Interval(t.dim, t.dim) if t.dim is not None else _Interval() for t in seq.terms]
    # ranks[i+1] = rank(T_i -> T_{i+1}), ranks[0] = ranks[n] = 0 (양 끝의 0)
    ranks = [_Interval() for _ in range(n + 1)]
    ranks[0] = _Interval(0, 0)
    ranks[n] = _Interval(0, 0)

    log = list(seq.log)
    for fact in seq.assertions:
        log.append(f"ASSERTED: {fact.describe()}")

    def rank_of(i: int) -> _Interval:
        return ranks[i + 1]

    for round_no in range(max_rounds):
        changed = False

        for fact in seq.assertions:
            if fact.kind == "dim":
                d = dims[fact.index]
                changed |= d.tighten(fact.value, fact.value)
                continue
            r = rank_of(fact.index)
            if fact.value == ZERO:
                changed |= r.tighten(0, 0)
            elif fact.value == INJECTIVE:
                source = dims[fact.index]
                changed |= r.tighten(source.lo, source.hi)
                changed |= source.tighten(r.lo, r.hi)
            elif fact.value == SURJECTIVE:
                target = dims[fact.index + 1]
                changed |= r.tighten(target.lo, target.hi)
                changed |= target.tighten(r.lo, r.hi)
            else:
                changed |= r.tighten(int(fact.value), int(fact.value))

        for i in range(n):
            d, left, right = dims[i], ranks[i], ranks[i + 1]
            # 0 <= rank <= min(이웃 차원)
            changed |= right.tighten(0, d.hi)
            changed |= left.tighten(0, d.hi)
            # dim T_i = r_{i-1} + r_i
            changed |= d.tighten(left.lo + right.lo, _add_hi(left.hi, right.hi))
            if d.hi is not None:
                changed |= right.tighten(hi=d.hi - left.lo)
                changed |= left.tighten(hi=d.hi - right.lo)
            if left.hi is not None:
                changed |= right.tighten(lo=d.lo - left.hi)
            if right.hi is not None:
                changed |= left.tighten(lo=d.lo - right.hi)

        for i, interval in enumerate(dims):
            if interval.empty():
                raise InconsistentSequenceError(f"{seq.terms[i].label}: [{interval.lo}, {interval.hi}]")
        for i, interval in enumerate(ranks):
            if interval.empty():
                raise InconsistentSequenceError(f"rank #{i - 1}: [{interval.lo}, {interval.hi}]")

        if not changed:
            break
    else:
        log_step(f"⚠️ 전파가 {max_rounds}회 안에 수렴하지 않음: {seq.render()}")

    terms = []
    for term, interval in zip(seq.terms, dims):
        value = interval.fixed()
        if term.dim is None and value is not None:
            log.append(f"DERIVED: dim {term.label} = {value}")
        terms.append(SeqTerm(term.label, term.dim if term.dim is not None else value))

    return replace(seq, terms=tuple(terms),
                   ranks=tuple(r.fixed() for r in ranks[1:n]),
                   log=tuple(log))
