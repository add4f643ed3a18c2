"""
선다발 코호몰로지 / 완전열 전파 테스트
"""
import pytest

from src.cohom import (ExactSeq, InconsistentSequenceError, ZERO, ambient_euler_characteristic,
                       bott_p2, cohomology_sweep, end_deformation_dims, h0_ic, h0_ox,
                       hypersurface_coh, ideal_sheaf_coh, kunneth_p, les_propagate)


@pytest.mark.parametrize("d, i, expected", [(2, 0, 6), (-3, 2, 1), (-5, 2, 6), (1, 1, 0), (-1, 0, 0)])
def test_bott_formula(d, i, expected):
    assert bott_p2(d, i) == expected


def test_kunneth():
    assert kunneth_p(3, 2)[0] == 60
    assert kunneth_p(-3, -3)[4] == 1
    assert kunneth_p(-5, 0).dims == (0, 0, 6, 0, 0)


@pytest.mark.parametrize("a, b, expected", [
    (2, -2, (0, 0, 0, 0)),
    (0, 0, (1, 0, 0, 1)),
    (-5, 0, (0, 0, 6, 21)),
    (-2, 2, (0, 0, 0, 0)),
])
def test_hypersurface_tables(a, b, expected):
    assert hypersurface_coh(a, b).dims == expected


def test_h0_ox_and_ideal_sections():
    assert h0_ox(0, 0) == 1
    assert h0_ox(3, 3) == 100 - 1
    assert h0_ic(0, 0) == 0
    assert h0_ic(1, 0) == 1
    assert h0_ic(0, 1) == 2
    assert h0_ic(-1, 4) == 0


def test_ideal_sheaf_table_at_determinant_twist():
    table = ideal_sheaf_coh(-2, 2)
    assert table[0] == 0
    assert table[1] == 0


def test_serre_duality_and_euler_characteristic():
    radius = 6
    checked = 0
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            table = hypersurface_coh(a, b)
            mirror = hypersurface_coh(-a, -b)
            for i in range(4):
                if table[i] is not None and mirror[3 - i] is not None:
                    assert table[i] == mirror[3 - i], (a, b, i)
                    checked += 1
            chi = table.euler_characteristic()
            if chi is not None:
                assert chi == ambient_euler_characteristic(a, b)
    assert checked >= 50


def test_les_fills_forced_dimension():
    seq = ExactSeq.of(("A", 1), ("B", None), ("C", 3))
    solved = les_propagate(seq)
    assert solved.dim("B") == 4
    assert any(line.startswith("DERIVED") for line in solved.log)


def test_les_leaves_unknown_when_not_forced():
    seq = ExactSeq.of(("A", 2), ("B", None), ("C", None), ("D", 1))
    solved = les_propagate(seq)
    assert solved.dim("B") is None


def test_les_detects_inconsistency():
    seq = ExactSeq.of(("A", 5), ("B", 1), ("C", 0))
    with pytest.raises(InconsistentSequenceError, match="inconsistent input dimensions"):
        les_propagate(seq)


def test_les_uses_asserted_rank():
    seq = ExactSeq.of(("A", None), ("B", 3), ("C", None), ("D", 1)).assert_rank(
        1, ZERO, statement="B→C is zero", justification="test")
    solved = les_propagate(seq)
    assert solved.dim("A") == 3
    assert solved.dim("C") == 1
    assert solved.log[0].startswith("ASSERTED: B→C is zero")


def test_end_deformations_from_chase():
    result = end_deformation_dims(2)
    assert result.h1_end == 2
    assert result.h0_E == 1
    assert result.h1_E == 0
    assert len(result.assertions) == 2
    logged = [line for seq in result.sequences for line in seq.log if line.startswith("ASSERTED")]
    assert len(logged) == 2


def test_end_deformations_default_uses_normal_bundle():
    assert end_deformation_dims().h0_normal == 2


def test_kunneth_is_symmetric_under_swap():
    for a in range(-7, 8):
        for b in range(-7, 8):
            assert kunneth_p(a, b).dims == kunneth_p(b, a).dims


def test_ideal_sections_bounded_by_ambient_sections():
    sweep = cohomology_sweep(3)
    for row in sweep.itertuples():
        a, b = int(row.a), int(row.b)
        ambient = h0_ox(a, b)
        assert h0_ic(a, b) <= ambient
        if row.h0 is not None and row.h0 == row.h0:
            assert int(row.h0) == ambient
