"""
기울기 안정성 검사 모듈
"""
from .checker import (Candidate, StabilityReport, PolarizationError, EXCLUDED_BY_DEGREE,
                      EXCLUDED_NO_SECTIONS, UNRESOLVED_LIFTING, STABLE, CONDITIONALLY_STABLE,
                      UNSTABLE, parse_polarization, section_upper_bound, slope_gap, classify,
                      search_box, enumerate_candidates, verdict, brute_force_scan,
                      missed_candidates, degree_checks)

__all__ = [
    "Candidate", "StabilityReport", "PolarizationError", "EXCLUDED_BY_DEGREE",
    "EXCLUDED_NO_SECTIONS", "UNRESOLVED_LIFTING", "STABLE", "CONDITIONALLY_STABLE",
    "UNSTABLE", "parse_polarization", "section_upper_bound", "slope_gap", "classify",
    "search_box", "enumerate_candidates", "verdict", "brute_force_scan",
    "missed_candidates", "degree_checks",
]
