"""
인증서 / 명령줄 테스트
"""
import json
from fractions import Fraction

import pytest

from src.cohom import LineBundle
from src.construct import ConstructionData
from src.report import (ANCHORS, FAIL, FLAGGED, GROUPS, PASS, SKIPPED, Certificate, CheckRecord,
                        canonical, emit, input_digest, resolve_command, run, run_checks)
from src.report import anchors
from src.report.checks import (check, check_brute_force, check_bundle_E, check_degree_positivity,
                               check_degree_twist, check_ideal_sections, check_stability_verdict)
from src.report.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE


QUOTED_CLAIMS = {
    "In particular if H^2(L^*)=0 then E and s exist",
    "H^1(End E) ≅ H^0(ν_{C/X})",
    "0→O_P(k−3,l−3)→O_P(k,l)→O_X(k,l)→0",
    "if and only if a≥0, b≥1",
    "ν_{C/X} ≅ O_C(1) ⊕ O_C(−3)",
    "∂p/∂x|_C = 0",
    "s is not in the image of the restriction map",
    "completely obstructed to second order",
    "for s ≠ α(y±iz) at least, H^0(ν_{C_ε/X_ε}) = 0",
    "with ω_1ω_2 = ω_1^2 + ω_2^2",
    "c_1 = 2ω_2−2ω_1 and c_2 = ω_2^2/3",
    "c_2(A) = ω_1^2 + 4/3 ω_2^2 is indivisible",
    "c_1(E).(Nω_1+ω_2)^2 = 6(N^2−1)",
    "12(2N+1)",
    "which are positive for N>1",
    "slope-stable … with respect to the Kähler forms Nω_1+ω_2, N>1",
    "the base locus of this linear system is just f",
    "this is [1:−1:0] … which does not lie on X",
}


def _by_id(records):
    return {r.id: r for r in records}


def test_anchor_vocabulary_is_quoted_verbatim():
    assert set(ANCHORS) == QUOTED_CLAIMS


def test_every_check_uses_known_anchor():
    functions = [fn for group in GROUPS.values() for fn in group]
    functions += [check_stability_verdict, check_brute_force, check_degree_positivity]
    for fn in functions:
        assert fn.anchor in ANCHORS
    assert len({fn.check_id for fn in functions}) == len(functions)


def test_record_rejects_unknown_anchor_and_status():
    with pytest.raises(ValueError, match="anchor"):
        CheckRecord("x", "made up claim", PASS)
    with pytest.raises(ValueError):
        CheckRecord("x", anchors.RING_RELATION, "MAYBE")


def test_certificate_rejects_duplicate_ids():
    cert = Certificate("0.1.0", input_digest("x"))
    cert.add(CheckRecord("a", anchors.RING_RELATION, PASS))
    with pytest.raises(ValueError, match="중복"):
        cert.add(CheckRecord("a", anchors.RING_RELATION, FAIL))


def test_overall_and_exit_code():
    cert = Certificate("0.1.0", input_digest("x"))
    cert.extend([CheckRecord("b", anchors.DEGREE_TWIST, FLAGGED),
                 CheckRecord("c", anchors.THICKENED_SECTIONS, SKIPPED)])
    assert cert.overall == PASS
    assert cert.exit_code() == 0
    cert.add(CheckRecord("a", anchors.RING_RELATION, FAIL))
    assert cert.overall == FAIL
    assert cert.exit_code() == 1
    assert [r.id for r in cert.ordered()] == ["a", "b", "c"]


def test_canonical_values():
    assert canonical(Fraction(1, 3)) == "1/3"
    assert canonical({"k": (1, Fraction(2))}) == {"k": ["1", "2"]}
    assert canonical(30) == canonical(Fraction(30)) == "30"
    assert canonical([-2, Fraction(-1, 2)]) == ["-2", "-1/2"]
    assert canonical(True) is True
    assert canonical(None) is None


def test_input_digest(default_data, small_data):
    assert input_digest(default_data.canonical_text()) == input_digest(default_data.canonical_text())
    assert input_digest(default_data.canonical_text()) != input_digest(small_data.canonical_text())
    assert len(input_digest("")) == 64


def test_lemma_groups_unperturbed(default_data):
    records = _by_id(run_checks("normal-bundle", default_data) + run_checks("obstruction", default_data))
    assert records["lemma1.splitting"].status == PASS
    assert records["lemma1.splitting"].outputs["splitting"] == [1, -3]
    assert records["lemma1.restriction_vanishing"].status == PASS
    assert records["lemma2.directions"].status == PASS
    assert records["lemma2.all_directions"].status == PASS
    assert records["lemma2.thickened_sections"].status == SKIPPED


def test_cohomology_group(default_data):
    records = _by_id(run_checks("cohomology", default_data))
    assert records["cohomology.serre_feasibility"].status == PASS
    end = records["cohomology.end_deformations"]
    assert end.status == PASS
    assert end.outputs["h1_End_E"] == 2
    assert end.outputs["manual_assertions"] == 2
    assert sum(a.startswith("ASSERTED") for a in end.assertions) == 2
    assert records["cohomology.property_sweep"].status == PASS


def test_ideal_sections_counterexample_is_flagged(default_data):
    record = check_ideal_sections(default_data)
    assert record.status == FLAGGED
    assert record.outputs["h0_I_C(1,0)"] == 1
    assert record.outputs["h0_I_C(0,1)"] == 2


def test_chern_group(default_data):
    records = _by_id(run_checks("chern", default_data))
    for check_id in ("chern.ring_relation", "chern.bundle_E", "chern.bundle_A", "chern.degree_E"):
        assert records[check_id].status == PASS
    assert records["chern.bundle_A"].outputs["divisibility"] == "indivisible"


def test_degree_twist_disagreement_is_flagged(default_data):
    record = check_degree_twist(default_data, samples=[2, 3])
    assert record.status == FLAGGED
    assert record.outputs["agree"] is False
    assert canonical(record.outputs["oracle_polynomial"]) == "12*N + 6"
    assert canonical(record.outputs["claimed_polynomial"]) == "24*N + 12"
    assert record.outputs["values"] == {"2": 30, "3": 42}


def test_check_failure_becomes_fail_record():
    data = ConstructionData(ConstructionData.default().F, ConstructionData.default().p,
                            L=LineBundle("X", 5, 0))
    record = check_bundle_E(data)
    assert record.status == FAIL
    assert "not feasible" in record.outputs["error"]


def test_geometry_failure_becomes_fail_record(make_data):
    records = _by_id(run_checks("geometry", make_data("-1 x^2 y w^3")))
    assert records["geometry.base_locus"].status == PASS
    assert records["geometry.local_smoothness"].status == FAIL
    assert "smoothness argument fails" in records["geometry.local_smoothness"].outputs["error"]


@pytest.mark.parametrize("N, expected", [(Fraction(2), PASS), (Fraction(3), FLAGGED)])
def test_stability_records(N, expected, default_data):
    records = _by_id(run_checks("stability", default_data, N))
    assert records[f"stability.verdict.N={N}"].status == expected
    assert records[f"stability.brute_force.N={N}"].outputs["missed"] == []
    assert records["stability.degree_checks"].status == PASS


def test_stability_requires_N(default_data):
    with pytest.raises(ValueError, match="--N"):
        run_checks("stability", default_data)


def test_resolve_command():
    assert resolve_command("normal-bundle") == "lemma1"
    assert resolve_command("obstruction") == "lemma2"
    with pytest.raises(ValueError):
        resolve_command("everything")


def test_text_format(default_data, capsys):
    assert run(["verify", "lemma1", "--format", "text"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("bundlecheck ")
    assert lines[1] == f"input digest: {input_digest(default_data.canonical_text())}"
    assert lines[2] == f"[PASS] lemma1.restriction_vanishing: {anchors.PARTIAL_X_VANISHES}"
    assert lines[3] == f"[PASS] lemma1.splitting: {anchors.NORMAL_BUNDLE}"
    assert lines[-1] == "overall: PASS"


def test_flagged_text_has_details(default_data):
    cert = Certificate("0.1.0", input_digest(default_data.canonical_text()))
    cert.add(check_degree_twist(default_data, samples=[2]))
    text = emit(cert, "text")
    assert "[FLAGGED] chern.degree_twist" in text
    assert "12*N + 6" in text
    assert "24*N + 12" in text


def test_json_is_byte_identical(tmp_path):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert run(["verify", "lemma2", "--format", "json", "--out", str(first)]) == EXIT_OK
    assert run(["verify", "lemma2", "--format", "json", "--out", str(second)]) == EXIT_OK
    assert first.read_bytes() == second.read_bytes()
    payload = json.loads(first.read_text(encoding="utf-8"))
    assert payload["overall"] == PASS
    assert [c["id"] for c in payload["checks"]] == sorted(c["id"] for c in payload["checks"])


def test_perturbation_file(tmp_path, capsys):
    path = tmp_path / "p.txt"
    path.write_text("1/30 x^2 y w^3\n1/15 y^3 u w^2\n-1/12 y z^2 v w^2\n", encoding="utf-8")
    assert run(["verify", "obstruction", "--p-file", str(path), "--format", "json"]) == EXIT_OK
    payload = json.loads(capsys.readouterr().out)
    record = next(c for c in payload["checks"] if c["id"] == "lemma2.all_directions")
    assert record["outputs"]["status"] == "all directions obstructed"
    assert record["outputs"]["perturbation_within_bound"] is True
    assert record["outputs"]["perturbation_max_coefficient"] == "1/12"


@pytest.mark.parametrize("argv", [
    ["verify", "stability", "--N", "1"],
    ["verify", "stability", "--N", "abc"],
    ["verify", "stability"],
    ["verify", "everything"],
    ["verify", "lemma1", "--p-file", "does/not/exist.txt"],
])
def test_usage_errors(argv):
    assert run(argv) == EXIT_USAGE


def test_perturbation_not_vanishing_on_fibre(tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("y^3 w^3\n", encoding="utf-8")
    assert run(["verify", "lemma1", "--p-file", str(path)]) == EXIT_USAGE


def test_stability_cli(capsys):
    assert run(["verify", "stability", "--N", "2"]) == EXIT_OK
    assert "[PASS] stability.verdict.N=2" in capsys.readouterr().out


def test_failing_check_exit_code(tmp_path):
    path = tmp_path / "p.txt"
    path.write_text("-1 x^2 y w^3\n", encoding="utf-8")
    assert run(["verify", "geometry", "--p-file", str(path)]) == EXIT_FAIL


def test_out_to_missing_directory_is_usage_error(tmp_path):
    target = tmp_path / "no_such_dir" / "cert.json"
    assert run(["verify", "lemma1", "--format", "json", "--out", str(target)]) == EXIT_USAGE
    assert not target.exists()


def test_json_numbers_are_strings(tmp_path):
    out = tmp_path / "cert.json"
    assert run(["verify", "chern", "--format", "json", "--out", str(out)]) == EXIT_OK
    payload = json.loads(out.read_text(encoding="utf-8"))

    def numbers(value):
        if isinstance(value, dict):
            return [n for v in value.values() for n in numbers(v)]
        if isinstance(value, list):
            return [n for v in value for n in numbers(v)]
        return [value] if isinstance(value, (int, float)) and not isinstance(value, bool) else []

    assert numbers(payload) == []


def test_arithmetic_error_becomes_fail_record():
    @check("custom.division", anchors.RING_RELATION)
    def divide():
        return PASS, {}, {"ratio": Fraction(1, 0)}, []

    record = divide()
    assert record.status == FAIL
    assert record.outputs["error"].startswith("ZeroDivisionError")
