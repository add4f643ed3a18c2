"""
인증서 기록이 가리키는 주장 문구 (닫힌 어휘)

각 문구는 원문 인용을 글자 그대로 옮긴 것이다. 바꾸지 말 것.
"""

SERRE_FEASIBLE = "In particular if H^2(L^*)=0 then E and s exist"
END_DEFORMATIONS = "H^1(End E) ≅ H^0(ν_{C/X})"
COHOMOLOGY_TABLE = "0→O_P(k−3,l−3)→O_P(k,l)→O_X(k,l)→0"
SECTIONS_CRITERION = "if and only if a≥0, b≥1"
NORMAL_BUNDLE = "ν_{C/X} ≅ O_C(1) ⊕ O_C(−3)"
PARTIAL_X_VANISHES = "∂p/∂x|_C = 0"
NOT_IN_IMAGE = "s is not in the image of the restriction map"
COMPLETELY_OBSTRUCTED = "completely obstructed to second order"
THICKENED_SECTIONS = "for s ≠ α(y±iz) at least, H^0(ν_{C_ε/X_ε}) = 0"
RING_RELATION = "with ω_1ω_2 = ω_1^2 + ω_2^2"
CHERN_E = "c_1 = 2ω_2−2ω_1 and c_2 = ω_2^2/3"
CHERN_A = "c_2(A) = ω_1^2 + 4/3 ω_2^2 is indivisible"
DEGREE_E = "c_1(E).(Nω_1+ω_2)^2 = 6(N^2−1)"
DEGREE_TWIST = "12(2N+1)"
DEGREES_POSITIVE = "which are positive for N>1"
SLOPE_STABLE = "slope-stable … with respect to the Kähler forms Nω_1+ω_2, N>1"
BASE_LOCUS = "the base locus of this linear system is just f"
SMOOTH_NEAR_FIBRE = "this is [1:−1:0] … which does not lie on X"

ANCHORS = frozenset({
    SERRE_FEASIBLE, END_DEFORMATIONS, COHOMOLOGY_TABLE, SECTIONS_CRITERION,
    NORMAL_BUNDLE, PARTIAL_X_VANISHES, NOT_IN_IMAGE, COMPLETELY_OBSTRUCTED,
    THICKENED_SECTIONS, RING_RELATION, CHERN_E, CHERN_A, DEGREE_E, DEGREE_TWIST,
    DEGREES_POSITIVE, SLOPE_STABLE, BASE_LOCUS, SMOOTH_NEAR_FIBRE,
})
