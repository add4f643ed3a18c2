"""
교차환 / 천 류 모듈
"""
from .ring import (H2Class, H4Class, Polarization, Divisibility, AmbientRing, N_SYMBOL,
                   primitive_integrals, h2_square, h2_product, integrate_x, integrate_triple,
                   degree_polynomial, degree, slope, twist_chern, indivisibility)

__all__ = [
    "H2Class", "H4Class", "Polarization", "Divisibility", "AmbientRing", "N_SYMBOL",
    "primitive_integrals", "h2_square", "h2_product", "integrate_x", "integrate_triple",
    "degree_polynomial", "degree", "slope", "twist_chern", "indivisibility",
]
