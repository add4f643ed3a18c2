"""
P¹ 위 다발 사상의 핵 분할형 모듈
"""
from .splitting import (BundleMapP1, SplittingType, SplittingFitError, kernel_hilbert,
                        splitting_type, h0_of_splitting, random_bundle_map)

__all__ = [
    "BundleMapP1", "SplittingType", "SplittingFitError", "kernel_hilbert",
    "splitting_type", "h0_of_splitting", "random_bundle_map",
]
