"""
기울기 안정성 검사 테스트
"""
from fractions import Fraction

import pytest

from src.stability import (CONDITIONALLY_STABLE, EXCLUDED_BY_DEGREE, EXCLUDED_NO_SECTIONS, STABLE,
                           UNRESOLVED_LIFTING, PolarizationError, brute_force_scan, classify,
                           degree_checks, enumerate_candidates, missed_candidates,
                           parse_polarization, section_upper_bound, slope_gap, verdict)


@pytest.mark.parametrize("k, l, expected", [(0, 0, 1), (-2, 2, 0), (-3, 2, 1), (-4, 2, 3), (1, 0, 0)])
def test_section_upper_bound(k, l, expected):
    assert section_upper_bound(k, l) == expected


def test_slope_gap_formula(rng):
    for _ in range(50):
        N = Fraction(int(rng.integers(11, 80)), int(rng.integers(1, 10)))
        k, l = (int(v) for v in rng.integers(-6, 7, size=2))
        expected = 3 * (k * (2 * N + 1) + l * (N * N + 2 * N)) - 3 * (N * N - 1)
        assert slope_gap(k, l, N) == expected


def test_nonpositive_twists_are_excluded_by_degree(rng):
    for _ in range(50):
        N = 1 + Fraction(int(rng.integers(1, 40)), int(rng.integers(1, 10)))
        k, l = (int(v) for v in rng.integers(-6, 1, size=2))
        assert slope_gap(k, l, N) < 0


def test_verdict_N2():
    report = verdict(2)
    assert report.verdict == STABLE
    assert report.unresolved == []
    statuses = {(c.k, c.l): c.status for c in report.candidates}
    assert statuses[(-2, 2)] == EXCLUDED_NO_SECTIONS
    assert statuses[(-3, 2)] == EXCLUDED_BY_DEGREE
    assert statuses[(0, 0)] == EXCLUDED_BY_DEGREE


def test_verdict_N3():
    report = verdict(3)
    assert report.verdict == CONDITIONALLY_STABLE
    assert report.unresolved == [(-3, 2)]
    assert report.verdict_text() == "CONDITIONALLY_STABLE([(-3, 2)])"
    candidate = next(c for c in report.candidates if (c.k, c.l) == (-3, 2))
    assert candidate.status == UNRESOLVED_LIFTING
    assert candidate.slope_gap == 3
    assert candidate.branch == "I_C"
    assert len(report.notes) == 2


def test_verdict_three_halves():
    assert verdict(Fraction(3, 2)).verdict == STABLE


def test_conditional_threshold(rng):
    # 1 + √3 이상에서만 (-3,2) 가 남는다
    for _ in range(50):
        N = 1 + Fraction(int(rng.integers(1, 60)), int(rng.integers(1, 10)))
        report = verdict(N)
        expected = CONDITIONALLY_STABLE if N * N - 2 * N - 2 >= 0 else STABLE
        assert report.verdict == expected
        if expected == CONDITIONALLY_STABLE:
            assert (-3, 2) in report.unresolved
            assert all(l == 2 for _, l in report.unresolved)


@pytest.mark.parametrize("N", [1, Fraction(1, 2), 0, -3])
def test_polarization_must_exceed_one(N):
    with pytest.raises(PolarizationError, match="N > 1"):
        verdict(N)
    with pytest.raises(PolarizationError):
        enumerate_candidates(N)


def test_parse_polarization():
    assert parse_polarization("5/2") == Fraction(5, 2)
    assert parse_polarization(3) == 3
    with pytest.raises(PolarizationError):
        parse_polarization("1")
    with pytest.raises(ValueError):
        parse_polarization("abc")


@pytest.mark.parametrize("N", [2, 3, Fraction(5, 2), 10])
def test_brute_force_agrees_with_box(N):
    report = verdict(N)
    scan = brute_force_scan(N, radius=6)
    assert len(scan) == 13 * 13
    assert missed_candidates(report, scan) == []


def test_classify_branch_label():
    assert classify(-3, 2, 3, "I_C").branch == "I_C"
    assert classify(0, 0, 3).status == EXCLUDED_BY_DEGREE


def test_degree_checks():
    df = degree_checks([Fraction(3, 2), 2, 3, 10])
    assert list(df["N"]) == ["3/2", "2", "3", "10"]
    assert df["deg_E_matches_6(N^2-1)"].all()
    assert df["positive"].all()
    assert list(df["deg_E"]) == list(df["deg_E_poly_value"])
    assert df.loc[df["N"] == "2", "deg_twist"].item() == 30


def test_report_frame():
    report = verdict(3)
    df = report.to_frame()
    assert list(df.columns) == ["k", "l", "branch", "upper_bound", "slope_gap", "status"]
    assert len(df) == len(report.candidates)
    assert df[df["status"] == UNRESOLVED_LIFTING][["k", "l"]].values.tolist() == [[-3, 2]]
