"""
P¹ 분할형 추론 테스트
"""
import pytest

from src.p1split import (BundleMapP1, SplittingType, h0_of_splitting, kernel_hilbert,
                         random_bundle_map, splitting_type)
from src.poly.binform import BinForm, binform_gcd

ZERO_QUADRIC = BinForm.zero(2)
Z_CUBED = BinForm([0, 0, 0, 1])
Y_CUBED_PLUS_YZ2 = BinForm([1, 0, 1, 0])


@pytest.fixture
def normal_map():
    return BundleMapP1((1, 0, 0), 3, (ZERO_QUADRIC, Z_CUBED, Y_CUBED_PLUS_YZ2))


def test_kernel_hilbert_examples(normal_map):
    assert kernel_hilbert(normal_map, 0) == 2
    koszul = BundleMapP1((0, 0), 1, (BinForm([1, 0]), BinForm([0, 1])))
    assert kernel_hilbert(koszul, 2) == 2
    zero = BundleMapP1((1, 0, 0), 3, (ZERO_QUADRIC, BinForm.zero(3), BinForm.zero(3)))
    assert kernel_hilbert(zero, 0) == 4


def test_splitting_of_normal_map(normal_map):
    result = splitting_type(normal_map)
    assert result.degrees == (1, -3)
    assert h0_of_splitting(result) == 2


@pytest.mark.parametrize("sources, target, entries, expected", [
    ((0, 0), 1, (BinForm([1, 0]), BinForm([0, 1])), (-1,)),
    ((0, 0), 2, (BinForm([0, 0, 1]), BinForm([0, 1, 0])), (-1,)),
    ((2, 1), 0, (BinForm.zero(0), BinForm.zero(0)), (2, 1)),
])
def test_splitting_examples(sources, target, entries, expected):
    assert splitting_type(BundleMapP1(sources, target, entries)).degrees == expected


@pytest.mark.parametrize("degrees, expected", [((1, -3), 2), ((0, 0), 2), ((-1,), 0)])
def test_h0_of_splitting(degrees, expected):
    assert h0_of_splitting(SplittingType(degrees)) == expected


def test_entry_degree_is_checked():
    with pytest.raises(ValueError):
        BundleMapP1((0,), 2, (BinForm([1, 0]),))


def test_random_maps_fit_hilbert_function_and_first_chern(rng):
    for _ in range(60):
        bundle_map = random_bundle_map(rng)
        result = splitting_type(bundle_map)
        for t in (int(v) for v in rng.integers(-8, 9, size=10)):
            assert result.hilbert(t) == kernel_hilbert(bundle_map, t)
        if bundle_map.is_zero():
            assert result.degrees == tuple(sorted(bundle_map.source_degrees, reverse=True))
            continue
        assert result.rank == bundle_map.rank - 1
        excess = binform_gcd(bundle_map.entries).degree
        assert result.first_chern() == sum(bundle_map.source_degrees) - bundle_map.target_degree + excess
