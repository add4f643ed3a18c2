"""
1차 변형과 2차 장애 모듈
"""
from .obstruction import (DeformationDirection, FirstOrder, ObstructionSystem, ModuliVerdict,
                          RestrictionImage, MONOMIAL_BASIS, ALL_OBSTRUCTED, NOT_ALL_OBSTRUCTED,
                          INCONCLUSIVE, SECTION_MODULE_NOTE, SMALL_COEFFICIENT_BOUND,
                          first_order, first_order_from_map, eps_normal_map, forcing_factor,
                          perturbation_parts, max_perturbation_coefficient, auxiliary_pairing,
                          second_order_system, obstructed, obstructed_all, restriction_image,
                          local_ring_descriptor, sample_directions)

__all__ = [
    "DeformationDirection", "FirstOrder", "ObstructionSystem", "ModuliVerdict",
    "RestrictionImage", "MONOMIAL_BASIS", "ALL_OBSTRUCTED", "NOT_ALL_OBSTRUCTED",
    "INCONCLUSIVE", "SECTION_MODULE_NOTE", "SMALL_COEFFICIENT_BOUND",
    "first_order", "first_order_from_map", "eps_normal_map", "forcing_factor",
    "perturbation_parts", "max_perturbation_coefficient", "auxiliary_pairing",
    "second_order_system", "obstructed", "obstructed_all", "restriction_image",
    "local_ring_descriptor", "sample_directions",
]
