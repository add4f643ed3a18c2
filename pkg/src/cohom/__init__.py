"""
선다발 코호몰로지 모듈
"""
from .exact_seq import (ExactSeq, SeqTerm, Assertion, les_propagate, InconsistentSequenceError,
                        ZERO, INJECTIVE, SURJECTIVE)
from .line_bundles import (LineBundle, CohTable, bott_p2, bott_p1, kunneth_p, hypersurface_coh,
                           h0_ox, h0_ic, ideal_sheaf_coh, restrict_to_curve, divisor_sequence,
                           curve_sequence, cohomology_sweep, ambient_euler_characteristic)
from .chase import end_deformation_dims, ChaseResult

__all__ = [
    "ExactSeq", "SeqTerm", "Assertion", "les_propagate", "InconsistentSequenceError",
    "ZERO", "INJECTIVE", "SURJECTIVE",
    "LineBundle", "CohTable", "bott_p2", "bott_p1", "kunneth_p", "hypersurface_coh",
    "h0_ox", "h0_ic", "ideal_sheaf_coh", "restrict_to_curve", "divisor_sequence",
    "curve_sequence", "cohomology_sweep", "ambient_euler_characteristic",
    "end_deformation_dims", "ChaseResult",
]
