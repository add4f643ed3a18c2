"""
명령별 검사 모음

각 검사는 (status, inputs, outputs, assertions) 를 돌려주고 @check 가 CheckRecord 로 감싼다.
검사 안에서 난 ValueError 계열 예외는 FAIL 기록이 된다.
"""
import functools
import sys
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Sequence

import sympy as sp

from src.chern.ring import (N_SYMBOL, AmbientRing, H2Class, degree, degree_polynomial,
                            indivisibility, Polarization)
from src.cohom.chase import end_deformation_dims
from src.cohom.line_bundles import (ambient_euler_characteristic, cohomology_sweep, h0_ic,
                                    hypersurface_coh)
from src.common.config import Config
from src.common.trace import log_step
from src.construct.data import ConstructionData, normal_bundle_map
from src.construct.geometry import GeometryCertificate, base_locus_check, local_smoothness_check
from src.construct.serre import FEASIBLE, build_E, serre_feasible
from src.deform.obstruction import (ALL_OBSTRUCTED, MONOMIAL_BASIS, SECTION_MODULE_NOTE,
                                    SMALL_COEFFICIENT_BOUND, DeformationDirection, first_order,
                                    local_ring_descriptor, max_perturbation_coefficient,
                                    obstructed, obstructed_all, restriction_image,
                                    second_order_system)
from src.p1split.splitting import h0_of_splitting, splitting_type
from src.poly.binform import restrict_to_C
from src.report import anchors
from src.report.certificate import FAIL, FLAGGED, PASS, SKIPPED, CheckRecord
from src.stability.checker import (C1_E, CONDITIONALLY_STABLE, STABLE, brute_force_scan,
                                   degree_checks, missed_candidates, verdict)

ALIASES = {"normal-bundle": "lemma1", "obstruction": "lemma2"}
COMMANDS = ("all", "cohomology", "lemma1", "lemma2", "chern", "stability", "geometry")

LEMMA2_DIRECTIONS = ((1, 0), (0, 1), (1, 1))
EXPECTED_SPLITTING = (1, -3)
EXPECTED_RING = local_ring_descriptor(2)

# 주장된 E(2,-1) 차수
CLAIMED_TWIST_DEGREE = 12 * (2 * N_SYMBOL + 1)


def _status(ok: bool) -> str:
    return PASS if ok else FAIL


def check(check_id: str, anchor: str) -> Callable:
    """검사 함수를 CheckRecord 생성기로 감싸기 (id 는 키워드 인자로 format)"""
    def decorator(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            record_id = check_id.format(**kwargs)
            try:
                status, inputs, outputs, assertions = fn(*args, **kwargs)
            except (ValueError, ArithmeticError) as e:
                print(f"❌ {record_id} 실패: {e}", file=sys.stderr)
                return CheckRecord(record_id, anchor, FAIL, {},
                                   {"error": f"{type(e).__name__}: {e}"})
            return CheckRecord(record_id, anchor, status, inputs, outputs, list(assertions))
        wrapper.check_id = check_id
        wrapper.anchor = anchor
        return wrapper
    return decorator


# ----------------------------------------------------------------------
# cohomology
# ----------------------------------------------------------------------
@check("cohomology.serre_feasibility", anchors.SERRE_FEASIBLE)
def check_serre_feasibility(data: ConstructionData):
    dual = data.L.dual()
    table = hypersurface_coh(dual.a, dual.b)
    feasible = serre_feasible(data.L)
    ok = feasible == FEASIBLE and table.dims == (0, 0, 0, 0)
    return (_status(ok), {"L": [data.L.a, data.L.b]},
            {"h_dual": table.as_list(), "feasibility": feasible}, [])


@check("cohomology.end_deformations", anchors.END_DEFORMATIONS)
def check_end_deformations(data: ConstructionData):
    h0_normal = h0_of_splitting(splitting_type(normal_bundle_map(data)))
    result = end_deformation_dims(h0_normal)
    log = [line for seq in result.sequences for line in seq.log]
    manual = [line for line in log if line.startswith("ASSERTED")]
    ok = result.h1_end == 2 and len(manual) == 2
    outputs = {
        "h1_End_E": result.h1_end, "h0_E": result.h0_E, "h1_E": result.h1_E,
        "h1_E_dual": result.h1_E_dual, "h2_E_dual": result.h2_E_dual,
        "h0_normal": result.h0_normal, "manual_assertions": len(manual),
        "steps": list(result.steps),
    }
    return _status(ok), {"h0_normal": h0_normal}, outputs, log


@check("cohomology.property_sweep", anchors.COHOMOLOGY_TABLE)
def check_property_sweep(data: ConstructionData, radius: Optional[int] = None):
    radius = radius or Config.COHOMOLOGY_RADIUS
    frame = cohomology_sweep(radius)
    duality_violations = []
    euler_violations = []
    for a in range(-radius, radius + 1):
        for b in range(-radius, radius + 1):
            table = hypersurface_coh(a, b)
            mirror = hypersurface_coh(-a, -b)
            for i in range(4):
                if table[i] is not None and mirror[3 - i] is not None and table[i] != mirror[3 - i]:
                    duality_violations.append([a, b, i])
            chi = table.euler_characteristic()
            if chi is not None and chi != ambient_euler_characteristic(a, b):
                euler_violations.append([a, b])
    outputs = {
        "cells": len(frame),
        "determined": int(frame["determined"].sum()),
        "serre_duality_violations": duality_violations,
        "euler_violations": euler_violations,
    }
    ok = not duality_violations and not euler_violations
    return _status(ok), {"radius": radius}, outputs, []


@check("cohomology.ideal_sections", anchors.SECTIONS_CRITERION)
def check_ideal_sections(data: ConstructionData):
    values = {f"h0_I_C({a},{b})": h0_ic(a, b) for a, b in ((0, 0), (1, 0), (0, 1))}
    counterexample = values["h0_I_C(1,0)"] > 0
    outputs = dict(values)
    notes = []
    if counterexample:
        outputs["counterexample"] = "x ∈ H⁰(I_C(1,0)): a = 1, b = 0 has sections"
        notes.append("b ≥ 1 조건은 성립하지 않음: 안정성 검사는 이 값을 다시 계산해 사용")
    return (FLAGGED if counterexample else PASS), {}, outputs, notes


# ----------------------------------------------------------------------
# lemma1
# ----------------------------------------------------------------------
@check("lemma1.splitting", anchors.NORMAL_BUNDLE)
def check_normal_splitting(data: ConstructionData):
    bundle_map = normal_bundle_map(data)
    result = splitting_type(bundle_map)
    h0 = h0_of_splitting(result)
    inputs = {
        "source_degrees": list(bundle_map.source_degrees),
        "target_degree": bundle_map.target_degree,
        "entries": list(bundle_map.entries),
    }
    ok = result.degrees == EXPECTED_SPLITTING and h0 == 2
    return _status(ok), inputs, {"splitting": list(result.degrees), "h0": h0}, []


@check("lemma1.restriction_vanishing", anchors.PARTIAL_X_VANISHES)
def check_restriction_vanishing(data: ConstructionData):
    f_on_c = restrict_to_C(data.F)
    dx_on_c = restrict_to_C(data.F.partial("x"))
    ok = f_on_c.is_zero() and dx_on_c.is_zero()
    return _status(ok), {}, {"F|_C": f_on_c, "dF/dx|_C": dx_on_c}, []


# ----------------------------------------------------------------------
# lemma2
# ----------------------------------------------------------------------
@check("lemma2.directions", anchors.NOT_IN_IMAGE)
def check_directions(data: ConstructionData):
    outputs = {}
    all_obstructed = True
    for alpha, beta in LEMMA2_DIRECTIONS:
        direction = DeformationDirection(alpha, beta)
        system = second_order_system(data, direction)
        blocked = obstructed(direction, data)
        all_obstructed &= blocked
        outputs[f"({alpha},{beta})"] = {"obstructed": blocked, "rhs": list(system.rhs)}
    system = second_order_system(data)
    inputs = {"basis": list(MONOMIAL_BASIS), "matrix": [list(row) for row in system.matrix]}
    return _status(all_obstructed), inputs, outputs, []


@check("lemma2.all_directions", anchors.COMPLETELY_OBSTRUCTED)
def check_all_directions(data: ConstructionData):
    moduli = obstructed_all(data)
    first = first_order(data)
    largest = max_perturbation_coefficient(data)
    outputs = {
        "first_order_dimension": moduli.first_order_dimension,
        "splitting": list(first.splitting.degrees),
        "compatibility_forms": list(moduli.compatibility_forms),
        "gcd": moduli.gcd,
        "status": moduli.status,
        "local_ring": moduli.local_ring,
        "perturbation_max_coefficient": largest,
        "perturbation_within_bound": largest < SMALL_COEFFICIENT_BOUND,
    }
    ok = moduli.status == ALL_OBSTRUCTED and moduli.local_ring == EXPECTED_RING
    return _status(ok), {"basis": list(MONOMIAL_BASIS)}, outputs, list(moduli.notes)


@check("lemma2.thickened_sections", anchors.THICKENED_SECTIONS)
def check_thickened_sections(data: ConstructionData):
    outputs = {}
    for alpha, beta in ((1, 0), (0, 1)):
        image = restriction_image(DeformationDirection(alpha, beta), data)
        outputs[f"({alpha},{beta})"] = {
            "image_dimension": image.dimension,
            "section_attained": image.section_attained,
        }
    return SKIPPED, {}, outputs, [SECTION_MODULE_NOTE]


# ----------------------------------------------------------------------
# chern
# ----------------------------------------------------------------------
@check("chern.ring_relation", anchors.RING_RELATION)
def check_ring_relation(data: ConstructionData):
    ring = AmbientRing()
    integrals = ring.primitive_integrals()
    expected = {(3, 0): 0, (2, 1): 3, (1, 2): 3, (0, 3): 0}
    ok = ring.check_relation() and integrals == expected
    outputs = {f"w1^{i} w2^{j}": v for (i, j), v in sorted(integrals.items(), reverse=True)}
    return _status(ok), {"hypersurface_class": [3, 3]}, outputs, []


@check("chern.bundle_E", anchors.CHERN_E)
def check_bundle_E(data: ConstructionData):
    record = build_E(data)
    ok = record.c1 == H2Class(-2, 2) and record.c2.coords() == (0, Fraction(1, 3))
    outputs = {"c1": list(record.c1.coords()), "c2": list(record.c2.coords()),
               "sequence": record.sequence}
    return _status(ok), {"L": [data.L.a, data.L.b]}, outputs, list(record.notes)


@check("chern.bundle_A", anchors.CHERN_A)
def check_bundle_A(data: ConstructionData):
    a_record = build_E(data).derived[0]
    lattice = indivisibility(a_record.c2)
    ok = (a_record.c1 == H2Class(0, 0)
          and a_record.c2.coords() == (1, Fraction(4, 3))
          and lattice.kind == "indivisible")
    outputs = {
        "c1": list(a_record.c1.coords()), "c2": list(a_record.c2.coords()),
        "integral_coords": list(lattice.integral_coords), "divisibility": str(lattice),
        "sequence": a_record.sequence,
    }
    return _status(ok), {"twist": list(a_record.twist)}, outputs, list(a_record.notes)


@check("chern.degree_E", anchors.DEGREE_E)
def check_degree_E(data: ConstructionData):
    polynomial = degree_polynomial(C1_E)
    ok = sp.expand(polynomial - 6 * (N_SYMBOL ** 2 - 1)) == 0
    return _status(ok), {"c1": list(C1_E.coords())}, {"degree": polynomial}, []


@check("chern.degree_twist", anchors.DEGREE_TWIST)
def check_degree_twist(data: ConstructionData, samples: Optional[Sequence] = None):
    samples = samples or Config.STABILITY_SAMPLES
    c1 = C1_E + 2 * H2Class(2, -1)
    oracle = degree_polynomial(c1)
    claimed = sp.expand(CLAIMED_TWIST_DEGREE)
    values = {str(N): degree(c1, Polarization(N)) for N in samples}
    positive = all(v > 0 for v in values.values())
    outputs = {
        "oracle_polynomial": oracle,
        "claimed_polynomial": claimed,
        "agree": sp.expand(oracle - claimed) == 0,
        "values": values,
    }
    if not positive:
        return FAIL, {"c1": list(c1.coords())}, outputs, []
    status = PASS if outputs["agree"] else FLAGGED
    notes = [] if outputs["agree"] else ["오라클 값과 주장 값이 2배 차이; 판정은 오라클 값(부호는 동일)"]
    return status, {"c1": list(c1.coords())}, outputs, notes


# ----------------------------------------------------------------------
# stability
# ----------------------------------------------------------------------
@check("stability.verdict.N={N}", anchors.SLOPE_STABLE)
def check_stability_verdict(*, N: Fraction):
    report = verdict(N)
    candidates = [
        {"k": c.k, "l": c.l, "status": c.status, "upper_bound": c.upper_bound, "slope_gap": c.slope_gap}
        for c in report.candidates
    ]
    outputs = {"verdict": report.verdict, "unresolved": report.unresolved, "candidates": candidates}
    status = {STABLE: PASS, CONDITIONALLY_STABLE: FLAGGED}.get(report.verdict, FAIL)
    return status, {"N": N}, outputs, report.notes


@check("stability.brute_force.N={N}", anchors.SLOPE_STABLE)
def check_brute_force(*, N: Fraction, radius: Optional[int] = None):
    radius = radius or Config.BRUTE_FORCE_RADIUS
    scan = brute_force_scan(N, radius)
    missed = missed_candidates(verdict(N), scan)
    return _status(not missed), {"N": N, "radius": radius}, {"cells": len(scan), "missed": missed}, []


@check("stability.degree_checks", anchors.DEGREES_POSITIVE)
def check_degree_positivity(samples: Optional[Sequence] = None):
    samples = samples or Config.STABILITY_SAMPLES
    frame = degree_checks(samples)
    ok = bool(frame["positive"].all()) and bool(frame["deg_E_matches_6(N^2-1)"].all())
    outputs = {row["N"]: {"deg_E": row["deg_E"], "deg_twist": row["deg_twist"]}
               for row in frame.to_dict("records")}
    return _status(ok), {"samples": list(samples)}, outputs, []


# ----------------------------------------------------------------------
# geometry
# ----------------------------------------------------------------------
def _geometry_outputs(cert: GeometryCertificate) -> Dict[str, object]:
    return {c.name: {"passed": c.passed, **c.detail} for c in cert.checks}


@check("geometry.base_locus", anchors.BASE_LOCUS)
def check_base_locus(data: ConstructionData):
    cert = base_locus_check()
    return _status(cert.passed), {}, _geometry_outputs(cert), cert.notes


@check("geometry.local_smoothness", anchors.SMOOTH_NEAR_FIBRE)
def check_local_smoothness(data: ConstructionData):
    cert = local_smoothness_check(data)
    return _status(cert.passed), {"p": data.p}, _geometry_outputs(cert), cert.notes


GROUPS = {
    "cohomology": (check_serre_feasibility, check_end_deformations, check_property_sweep,
                   check_ideal_sections),
    "lemma1": (check_normal_splitting, check_restriction_vanishing),
    "lemma2": (check_directions, check_all_directions, check_thickened_sections),
    "chern": (check_ring_relation, check_bundle_E, check_bundle_A, check_degree_E,
              check_degree_twist),
    "geometry": (check_base_locus, check_local_smoothness),
}


def stability_checks(N_values: Sequence[Fraction]) -> List[CheckRecord]:
    records = []
    for N in N_values:
        records.append(check_stability_verdict(N=N))
        records.append(check_brute_force(N=N))
    records.append(check_degree_positivity())
    return records


def resolve_command(command: str) -> str:
    command = ALIASES.get(command, command)
    if command not in COMMANDS:
        raise ValueError(f"알 수 없는 명령: {command}")
    return command


def run_checks(command: str, data: ConstructionData,
               N: Optional[Fraction] = None) -> List[CheckRecord]:
    """
    명령 하나에 해당하는 검사 실행

    Args:
        command: all / cohomology / lemma1 / lemma2 / chern / stability / geometry (별칭 허용)
        data: 구성 데이터
        N: stability 의 편극 (all 에서 생략하면 STABILITY_SAMPLES 전체)
    """
    command = resolve_command(command)
    if command == "stability":
        if N is None:
            raise ValueError("stability 명령에는 --N 이 필요합니다")
        return stability_checks([N])

    names = list(GROUPS) if command == "all" else [command]
    records = []
    for name in names:
        log_step(f"🔄 {name} 검사 중...")
        records.extend(fn(data) for fn in GROUPS[name])
    if command == "all":
        records.extend(stability_checks([N] if N is not None else Config.STABILITY_SAMPLES))
    return records
