"""
Serre 구성과 올 근방 기하 검사 모듈
"""
from .data import ConstructionData, load_perturbation, normal_bundle_map, offending_terms
from .serre import (SequenceRecord, SerreInfeasibleError, serre_feasible, build_E,
                    FEASIBLE, UNKNOWN, A_TWIST)
from .geometry import (GeometryCertificate, SubCheck, SmoothnessError, base_locus_generators,
                       base_locus_check, local_smoothness_check, UNPERTURBED_CAVEAT)

__all__ = [
    "ConstructionData", "load_perturbation", "normal_bundle_map", "offending_terms",
    "SequenceRecord", "SerreInfeasibleError", "serre_feasible", "build_E",
    "FEASIBLE", "UNKNOWN", "A_TWIST",
    "GeometryCertificate", "SubCheck", "SmoothnessError", "base_locus_generators",
    "base_locus_check", "local_smoothness_check", "UNPERTURBED_CAVEAT",
]
