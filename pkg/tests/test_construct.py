"""
Serre 구성 / 기하 검사 테스트
"""
from fractions import Fraction

import pytest

from src.chern import H2Class, H4Class
from src.cohom import LineBundle
from src.construct import (ConstructionData, SerreInfeasibleError, SmoothnessError,
                           base_locus_check, base_locus_generators, build_E, load_perturbation,
                           local_smoothness_check, normal_bundle_map, serre_feasible)
from src.p1split import splitting_type
from src.poly import CommonFactorError, PolynomialFormatError, parse_biform, restrict_to_C


@pytest.mark.parametrize("L, expected", [((-2, 2), "feasible"), ((5, 0), "unknown"), ((0, 0), "feasible")])
def test_serre_feasibility(L, expected):
    assert serre_feasible(L) == expected


def test_build_E_default(default_data):
    record = build_E(default_data)
    assert record.c1 == H2Class(-2, 2)
    assert record.c2 == H4Class(0, Fraction(1, 3))
    a_record = record.derived[0]
    assert a_record.name == "A"
    assert a_record.c1 == H2Class(0, 0)
    assert a_record.sequence == "0 → O_X(1,-1) → A → I_C(-1,1) → 0"


def test_build_E_rejects_infeasible_bundle():
    data = ConstructionData(ConstructionData.default().F, ConstructionData.default().p,
                            L=LineBundle("X", 5, 0))
    with pytest.raises(SerreInfeasibleError, match="not feasible"):
        build_E(data)


def test_chern_data_independent_of_perturbation(default_data, small_data):
    assert build_E(default_data).c2 == build_E(small_data).c2
    assert build_E(default_data).derived[0].c2 == build_E(small_data).derived[0].c2


def test_perturbation_must_vanish_on_fibre(make_data):
    with pytest.raises(ValueError, match="does not vanish on f"):
        make_data("y^3 w^3")


def test_admissible_perturbations_keep_curve_in_X(rng, random_biform):
    for _ in range(50):
        p = random_biform(rng, (3, 2), n_terms=3) * parse_biform("u") \
            + random_biform(rng, (3, 2), n_terms=3) * parse_biform("v")
        data = ConstructionData.with_perturbation(p)
        assert restrict_to_C(data.F).is_zero()
        assert restrict_to_C(data.F.partial("x")).is_zero()


def test_normal_bundle_map_of_small_perturbation(small_data):
    bundle_map = normal_bundle_map(small_data)
    assert bundle_map.entries[0].is_zero()
    assert bundle_map.entries[1].coeffs == (Fraction(1, 15), 0, 0, 1)
    assert splitting_type(bundle_map).degrees == (1, -3)


def test_load_perturbation(tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("# 섭동\n1/20 x^2 y w^3\n", encoding="utf-8")
    assert load_perturbation(path).coefficient((2, 1, 0, 0, 0, 3)) == Fraction(1, 20)
    path.write_text("x^2 y\n", encoding="utf-8")
    with pytest.raises(PolynomialFormatError):
        load_perturbation(path)


def test_base_locus_passes():
    cert = base_locus_check()
    assert cert.passed
    counts = cert.checks[0].detail
    assert counts["listed"] == 130
    assert counts["distinct"] == 91
    assert cert.checks[2].detail["locus"] == "{x²y = 0}"


def test_base_locus_negative_control():
    cert = base_locus_check(include_fibre_generators=False)
    fibre = next(c for c in cert.checks if c.name == "fibre_locus")
    assert not fibre.passed
    assert fibre.detail["locus"] == "P²₁ 전체"
    assert not cert.passed


def test_generators_vanish_on_fibre():
    for generator in base_locus_generators():
        assert generator.evaluate((0, 1, 1, 0, 0, 1)) == 0


def test_local_smoothness_unperturbed(default_data):
    cert = local_smoothness_check(default_data)
    assert cert.passed
    assert cert.checks[0].detail["common_zeros"] == {"['1', '-1', '0']": "-1"}
    assert any("w²" in note for note in cert.notes)


def test_local_smoothness_with_doubled_term(make_data):
    cert = local_smoothness_check(make_data("z^3 u w^2"))
    assert cert.passed


def test_local_smoothness_shared_factor(make_data):
    with pytest.raises(CommonFactorError, match="positive-dimensional"):
        local_smoothness_check(make_data("-1 x^3 v w^2\n-3 x^2 y v w^2\n-3 x y^2 v w^2\n-1 y^3 v w^2"))


def test_local_smoothness_fails_when_zero_lies_on_X(make_data):
    # x²yw³ 를 지우면 [1:-1:0] 에서 F 가 0 이 된다
    with pytest.raises(SmoothnessError, match="smoothness argument fails"):
        local_smoothness_check(make_data("-1 x^2 y w^3"))
